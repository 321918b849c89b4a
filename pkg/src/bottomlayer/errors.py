"""Exception hierarchy. The CLI prints ``type(err).__name__`` on domain errors."""


class BottomLayerError(Exception):
    pass


class ParseError(BottomLayerError, ValueError):
    pass


class WeightLengthMismatch(BottomLayerError, ValueError):
    pass


class NonDominantWeight(BottomLayerError, ValueError):
    pass


class NonIntegral(BottomLayerError, ValueError):
    pass


class TypeMismatch(BottomLayerError, ValueError):
    pass


class InvalidModule(BottomLayerError, ValueError):
    """A weight map that is not the character of an actual module."""


class NotTorusCompatible(BottomLayerError, ValueError):
    pass


class InvalidBlocks(BottomLayerError, ValueError):
    pass


class CapExceeded(BottomLayerError, ValueError):
    pass


class NotInCartan(BottomLayerError, ValueError):
    pass


class IncompatibleBorel(BottomLayerError, ValueError):
    pass


class NotProper(BottomLayerError, ValueError):
    pass


class NotSymmetricSetup(BottomLayerError, ValueError):
    pass


class DuplicateWeight(BottomLayerError, ValueError):
    pass
