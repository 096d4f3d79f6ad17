class BoolSkelError(Exception):
    pass


class NetworkFormatError(BoolSkelError):
    def __init__(self, message, line=None, offset=None):
        location = ''
        if line is not None:
            location = f' (line {line})'
        elif offset is not None:
            location = f' (byte {offset})'
        super().__init__(message + location)
        self.line = line
        self.offset = offset


class NetworkValidationError(BoolSkelError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class EvaluationError(BoolSkelError):
    pass


class ContractError(BoolSkelError):
    pass


class DanglingNodeError(ContractError):
    def __init__(self, node):
        super().__init__(f'node {node} has no fanouts')
        self.node = node


class EmptyGraphError(BoolSkelError):
    pass


class PathFileError(BoolSkelError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f'{message} (line {line})')
        self.line = line


class CycleError(BoolSkelError):
    pass


class OracleMismatchError(BoolSkelError):
    pass


class ConfigError(BoolSkelError):
    pass


class VerificationError(BoolSkelError):
    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations or []
