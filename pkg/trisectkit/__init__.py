__all__ = [
    "cli",
    "config",
    "diagram",
    "document",
    "errors",
    "invariants",
    "lattice",
    "moves",
    "packs",
    "params",
    "render",
    "surface",
]
