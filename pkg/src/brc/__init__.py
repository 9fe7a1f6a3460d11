"""Break-resilient codes for unordered, oriented fragment multisets."""
from brc.decoder import DecodeConflict, DecodeFailure, decode
from brc.encoder import encode
from brc.legit import check_legit, sample_legit
from brc.params import Params, ParamsError, derive_params

__all__ = [
    "DecodeConflict",
    "DecodeFailure",
    "Params",
    "ParamsError",
    "check_legit",
    "decode",
    "derive_params",
    "encode",
    "sample_legit",
]
