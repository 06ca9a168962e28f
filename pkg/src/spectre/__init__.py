from .spectra import GroupName, MinSpec, minimal_spectrum  # noqa: F401
