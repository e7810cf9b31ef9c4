from .decoder import decode_matrix, decode_rational, decode_vector
from .encoder import (dump_canonical, encode_matrix, encode_rational,
                      encode_vector)
from .sanitizer import convert_value, filter_null_fields, sanitize_fields

__all__ = [
    "decode_rational",
    "decode_matrix",
    "decode_vector",
    "encode_rational",
    "encode_matrix",
    "encode_vector",
    "dump_canonical",
    "convert_value",
    "filter_null_fields",
    "sanitize_fields",
]
