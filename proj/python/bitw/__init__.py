"""BiTW texture descriptor: ecological diversity indices over color
channels and discrete-wavelet subbands."""

try:
    from ._core import (
        biodiversity_vector,
        dwt2,
        extract,
        feature_count,
        feature_names,
        idwt2,
        quantize,
        taxonomic_vector,
    )
except ImportError:  # in-tree builds keep _core next to the build dir
    from _core import (
        biodiversity_vector,
        dwt2,
        extract,
        feature_count,
        feature_names,
        idwt2,
        quantize,
        taxonomic_vector,
    )

__all__ = [
    "biodiversity_vector",
    "dwt2",
    "extract",
    "feature_count",
    "feature_names",
    "idwt2",
    "quantize",
    "taxonomic_vector",
]
