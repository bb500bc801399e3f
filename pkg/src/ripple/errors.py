from dataclasses import dataclass


@dataclass(slots=True)
class RippleError(Exception):
    message: str
    hint: str
    category: str
    exit_code: int

    def render(self) -> tuple[str, str]:
        return (
            f"ERROR [{self.category}] {self.message}",
            f"Hint: {self.hint}",
        )

    def __str__(self) -> str:
        return self.message


def usage_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="usage", exit_code=2)


def config_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="config", exit_code=2)


def syntax_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="syntax", exit_code=2)


def cycle_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="cycle", exit_code=1)


def lookup_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="lookup", exit_code=1)


def evaluation_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="evaluation", exit_code=1)


def tooling_error(message: str, hint: str) -> RippleError:
    return RippleError(message=message, hint=hint, category="tooling", exit_code=1)
