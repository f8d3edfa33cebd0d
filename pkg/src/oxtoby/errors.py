"""Exception types shared across the package."""


class OxtobyError(Exception):
    pass


class RatioTooSmall(OxtobyError, ValueError):
    """A period ratio below 3; ``index`` is 1-based (the ratio p_i / p_{i-1})."""

    def __init__(self, index, ratio):
        super().__init__(f"ratio r_{index} = {ratio} < 3: not a fast growing sequence")
        self.index = index
        self.ratio = ratio


class DepthExceeded(OxtobyError):
    pass


class Misaligned(OxtobyError, ValueError):
    pass


class NoMatch(OxtobyError):
    def __init__(self, level):
        super().__init__(f"no residue mod p_{level} matches the window")
        self.level = level


class Ambiguous(OxtobyError):
    def __init__(self, level, candidates):
        super().__init__(
            f"window too narrow to pin down digit {level}: candidates {list(candidates)}")
        self.level = level
        self.candidates = tuple(candidates)


class LengthMismatch(OxtobyError, ValueError):
    pass


class TooFewSymbols(OxtobyError, ValueError):
    pass


class UnknownLemma(OxtobyError, KeyError):
    pass


class BoundsTooSmall(OxtobyError):
    pass


class ConfigError(OxtobyError, ValueError):
    pass
