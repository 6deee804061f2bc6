"""Prime-order subgroup arithmetic, validation and parameter sets."""

from .catalog import (
    BUILTIN_PARAM_SETS,
    TOY23,
    dump_params_file,
    get_param_set,
    load_params_file,
    parse_params_text,
    resolve_params,
)
from .derive import DS_H, derive_h, derive_h_value
from .elements import (
    GroupElement,
    Scalar,
    base_generator,
    decode_element,
    encode_element,
    generator,
    identity,
    invert,
    mul,
    power,
    second_generator,
    validate_element,
)
from .params import ENUMERATION_LIMIT, GroupParams, is_probable_prime, validate_params
from .random import RandomSource, ScriptedSource, random_scalar, seeded_source, system_source

__all__ = [
    # Parameters
    "ENUMERATION_LIMIT",
    "GroupParams",
    "BUILTIN_PARAM_SETS",
    "TOY23",
    "dump_params_file",
    "get_param_set",
    "is_probable_prime",
    "load_params_file",
    "parse_params_text",
    "resolve_params",
    "validate_params",
    # Elements
    "GroupElement",
    "Scalar",
    "base_generator",
    "decode_element",
    "encode_element",
    "generator",
    "identity",
    "invert",
    "mul",
    "power",
    "second_generator",
    "validate_element",
    # Derivation
    "DS_H",
    "derive_h",
    "derive_h_value",
    # Randomness
    "RandomSource",
    "ScriptedSource",
    "random_scalar",
    "seeded_source",
    "system_source",
]
