# Test package marker so tests can import shared helpers.
