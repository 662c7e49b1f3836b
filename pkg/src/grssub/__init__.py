"""Subfield subcodes of generalized Reed-Solomon codes via message constraints."""
from .errors import GrsSubError
from .extension import ExtensionCtx
from .extract import SubfieldSubcode, expand_generator, extract_subfield_subcode
from .grscode import GrsCode, auxiliary_code, canonical_generator, cyclic_grs, encode, grs_code
from .nested import enumerate_nested, subcode_from_rows, trajectories
from .smallfield import FieldSpec, SmallField, gf

__all__ = [
    "ExtensionCtx",
    "FieldSpec",
    "GrsCode",
    "GrsSubError",
    "SmallField",
    "SubfieldSubcode",
    "auxiliary_code",
    "canonical_generator",
    "cyclic_grs",
    "encode",
    "enumerate_nested",
    "expand_generator",
    "extract_subfield_subcode",
    "gf",
    "grs_code",
    "subcode_from_rows",
    "trajectories",
]

__version__ = "0.1.0"
