from typing import Any


class SurfaceMismatchError(ValueError):
    pass


class AlreadyClosedError(ValueError):
    pass


class TypeConstraintError(ValueError):
    pass


class NonstandardPairError(ValueError):
    pass


class MoveError(ValueError):
    pass


class CapOffError(ValueError):
    pass


class DiagramInvalidError(ValueError):
    def __init__(self, message: str, report: Any):
        super().__init__(message)
        self.report = report


class InvariantError(RuntimeError):
    pass


class DocumentError(ValueError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DocumentSchemaError(DocumentError):
    pass
