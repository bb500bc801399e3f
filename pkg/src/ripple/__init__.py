from ripple.avar import AVar, avar_get, avar_new, avar_set
from ripple.graph import Engine, NodeKind
from ripple.idset import NodeId
from ripple.memo import amemo, amemo_lazy, memoize
from ripple.observe import force, remove_adapton, suspend

__all__ = [
    "AVar",
    "Engine",
    "NodeId",
    "NodeKind",
    "__version__",
    "amemo",
    "amemo_lazy",
    "avar_get",
    "avar_new",
    "avar_set",
    "force",
    "memoize",
    "remove_adapton",
    "suspend",
]

__version__ = "0.1.0"
