"""Warnings raised by the library.
"""


class MemocrWarning(Warning):
    """The class for all warnings raised by `memocr`."""

    pass


class InstanceWarning(MemocrWarning, SyntaxWarning):
    """An evaluation instance record is malformed and was skipped."""

    pass


class LayoutWarning(MemocrWarning):
    """The layout engine had to degrade the rendering of a document.

    Emitted when a word wider than the usable canvas width is hard-broken
    over several lines instead of raising `~memocr.errors.WordTooWide`.
    """

    pass


class ConfigWarning(MemocrWarning):
    """A configuration value is accepted but probably not what you want."""

    pass
