"""Exceptions shared by both kernel implementations."""


class CapExceeded(RuntimeError):
    """An orbit or group closure grew past the caller's cap."""


class RangeExceeded(OverflowError):
    """Values left the compiled kernel's int64 safe range."""
