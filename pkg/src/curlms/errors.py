"""Exception classes shared across the package.

Each carries a short machine-readable ``code`` so the CLI can map failures
to stable exit diagnostics.
"""


class CurlmsError(Exception):
    code = "error"


class InvalidMeshError(CurlmsError):
    code = "invalid-mesh"


class IncompatibleGridsError(CurlmsError):
    code = "incompatible-grids"


class NotInteriorEdgeError(CurlmsError):
    code = "not-interior-edge"


class FieldError(CurlmsError):
    code = "invalid-field"


class RasterFormatError(CurlmsError):
    code = "raster-format"


class SolveError(CurlmsError):
    code = "solve-failure"


class RankDeficiencyError(SolveError):
    code = "rank-deficient"


class ConfigError(CurlmsError):
    code = "invalid-config"
