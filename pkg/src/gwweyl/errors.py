"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`GWWeylError`,
which the CLI maps to exit code 1.
"""


class GWWeylError(Exception):
    pass


class InvalidTypeError(GWWeylError, ValueError):
    pass


class RankMismatchError(GWWeylError, ValueError):
    pass


class RankCapError(GWWeylError, ValueError):
    pass


class NotDominantError(GWWeylError, ValueError):
    pass


class InvalidInvolutionError(GWWeylError, ValueError):
    pass


class InternalConsistencyError(GWWeylError, RuntimeError):
    pass


class NotACharacterError(GWWeylError, ValueError):
    pass


class NotARepresentationError(GWWeylError, ValueError):
    pass


class GeneratorSetIncompleteError(GWWeylError, ValueError):
    pass


class InvalidLatticeMapError(GWWeylError, ValueError):
    pass


class ModelMismatchError(GWWeylError, ValueError):
    pass


class GeneratorMismatchError(GWWeylError, ValueError):
    pass


class UnsupportedPresetError(GWWeylError, ValueError):
    pass


class NonSymmetricError(GWWeylError, ValueError):
    pass


class TruncationError(GWWeylError, ValueError):
    pass
