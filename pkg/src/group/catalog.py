"""Built-in parameter sets and the plain-text parameter-set file format.

File format, one ``key=value`` per line, no whitespace:

    p=17
    q=b
    g=2
    h=4
    name=toy23

p, q, g, h (and the optional negotiation base gb) are lowercase hex; name is a
label of letters, digits, dot, dash or underscore. When h is missing it is
derived from g with derive_h.
"""

import re
from collections.abc import Callable
from functools import lru_cache
from pathlib import Path

from src.config.logging import get_logger
from src.errors import InvalidParams, ParamsFileError, UnknownParamSet

from .derive import derive_h_value
from .params import GroupParams, collect_violations, validate_params

logger = get_logger(__name__)

# h = g^2: the discrete log is known. Functional tests only, never for real passwords.
TOY23 = GroupParams(p=23, q=11, g=2, h=4, name="toy23", base=2)

# RFC 3526, 2048-bit MODP group
MODP2048_P = int(
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD1"
    "29024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245"
    "E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D"
    "670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9"
    "DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF",
    16,
)

_ALLOWED_KEYS = ("p", "q", "g", "h", "name", "gb")
_REQUIRED_KEYS = ("p", "q", "g", "name")
_HEX = re.compile(r"[0-9a-f]+")
_NAME = re.compile(r"[A-Za-z0-9._-]+")


def _modp2048() -> GroupParams:
    p = MODP2048_P
    q = (p - 1) // 2
    g = 4
    return GroupParams(p=p, q=q, g=g, h=derive_h_value(g, p, q), name="modp2048", base=g)


BUILTIN_PARAM_SETS: dict[str, Callable[[], GroupParams]] = {
    "toy23": lambda: TOY23,
    "modp2048": _modp2048,
}


@lru_cache
def get_param_set(name: str) -> GroupParams:
    """A built-in set, built and validated on first request."""
    try:
        factory = BUILTIN_PARAM_SETS[name]
    except KeyError:
        raise UnknownParamSet(f"unknown parameter set: {name}") from None
    params = validate_params(factory())
    logger.debug("builtin_params_loaded", name=name)
    return params


def parse_params_text(text: str, source: str = "<string>") -> GroupParams:
    """Parse and validate a parameter-set file body.

    Raises:
        ParamsFileError: malformed lines, keys or values
        InvalidParams: well-formed but mathematically invalid
    """
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        if any(ch.isspace() for ch in line):
            raise ParamsFileError(f"{source}:{lineno}: whitespace is not allowed")
        key, sep, value = line.partition("=")
        if not sep or not value:
            raise ParamsFileError(f"{source}:{lineno}: expected key=value")
        if key not in _ALLOWED_KEYS:
            raise ParamsFileError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ParamsFileError(f"{source}:{lineno}: duplicate key {key!r}")
        pattern = _NAME if key == "name" else _HEX
        if not pattern.fullmatch(value):
            raise ParamsFileError(f"{source}:{lineno}: bad value for {key!r}")
        values[key] = value

    missing = [k for k in _REQUIRED_KEYS if k not in values]
    if missing:
        raise ParamsFileError(f"{source}: missing keys: {', '.join(missing)}")

    p, q, g = (int(values[k], 16) for k in ("p", "q", "g"))
    base = int(values["gb"], 16) if "gb" in values else None

    if "h" in values:
        h = int(values["h"], 16)
    else:
        violations = collect_violations(p, q, g, None, base)
        if violations:
            raise InvalidParams(violations)
        h = derive_h_value(g, p, q)
        logger.info("params_h_derived", source=source, name=values["name"])

    return validate_params(
        GroupParams(p=p, q=q, g=g, h=h, name=values["name"], base=base)
    )


def load_params_file(path: Path) -> GroupParams:
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise ParamsFileError(f"cannot read {path}: {e}") from e
    return parse_params_text(text, source=str(path))


def dump_params_file(params: GroupParams) -> str:
    """Canonical file body; gb is written only when it differs from g."""
    lines = [
        f"p={params.p:x}",
        f"q={params.q:x}",
        f"g={params.g:x}",
        f"h={params.h:x}",
        f"name={params.name}",
    ]
    if params.gb != params.g:
        lines.append(f"gb={params.gb:x}")
    return "\n".join(lines) + "\n"


def resolve_params(name_or_path: str) -> GroupParams:
    """A built-in set by name, else a parameter-set file by path."""
    if name_or_path in BUILTIN_PARAM_SETS:
        return get_param_set(name_or_path)
    path = Path(name_or_path)
    if path.is_file():
        return load_params_file(path)
    raise UnknownParamSet(f"not a built-in parameter set or readable file: {name_or_path}")
