class CptError(Exception):
    """Base class for errors raised by this package."""


class InvalidTreeError(CptError, ValueError):
    pass


class SizeError(CptError):
    """An input exceeds a brute-force guard."""


class ParseError(CptError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
