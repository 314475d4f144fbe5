"""Plain-text serialisation of storage schemes.

Layout::

    q 7
    n 6
    kd 2
    ks 2
    t 2
    d 3
    r 3
    GD
    2 6
    2 0 5 3 1 6
    0 6 5 4 3 2
    GS
    ...
    B
    ...
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, SecureDSSError
from .gf import field_new
from .matrix import Matrix
from .secure import SecureStorageCode

HEADER_KEYS = ("q", "n", "kd", "ks", "t", "d", "r")
BLOCKS = ("GD", "GS", "B")


def dumps(code: SecureStorageCode) -> str:
    out = [f"{key} {val}" for key, val in code.params().items()]
    for name, m in zip(BLOCKS, (code.G_D, code.G_S, code.B)):
        out.append(name)
        out.append(f"{m.rows} {m.cols}")
        out.extend(" ".join(str(x) for x in row) for row in m.tolist())
    return "\n".join(out) + "\n"


def loads(text: str) -> SecureStorageCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    pos = 0
    header: dict[str, int] = {}
    try:
        for key in HEADER_KEYS:
            name, val = lines[pos].split()
            if name != key:
                raise ParseError(f"line {pos + 1}: expected '{key}', got '{name}'")
            header[key] = int(val)
            pos += 1
        field = field_new(header["q"])
        mats = {}
        for name in BLOCKS:
            if lines[pos] != name:
                raise ParseError(f"expected block '{name}', got '{lines[pos]}'")
            rows, cols = (int(x) for x in lines[pos + 1].split())
            body = [[int(x) for x in lines[pos + 2 + i].split()] for i in range(rows)]
            if any(len(r) != cols for r in body):
                raise ParseError(f"block {name}: rows must have {cols} entries")
            if any(not 0 <= x < field.q for r in body for x in r):
                raise ParseError(f"block {name}: entries must lie in [0, {field.q})")
            mats[name] = Matrix(field, body, cols=cols)
            pos += 2 + rows
    except ParseError:
        raise
    except (IndexError, ValueError, SecureDSSError) as exc:
        raise ParseError(f"malformed code file: {exc}") from None
    if pos != len(lines):
        raise ParseError(f"unexpected trailing content: {lines[pos]!r}")
    GD, GS, B = mats["GD"], mats["GS"], mats["B"]
    n = header["n"]
    if (GD.shape, GS.shape, B.shape) != ((header["kd"], n), (header["ks"], n), (header["kd"], n)):
        raise ParseError("matrix shapes do not match the header")
    return SecureStorageCode(field=field, n=n, k_D=header["kd"], k_S=header["ks"], t=header["t"],
                             d=header["d"], r=header["r"], G_D=GD, G_S=GS, B=B,
                             M=Matrix.identity(field, header["kd"]), G_D_prime=GD, scheme="file")


def write(code: SecureStorageCode, path: str | Path) -> None:
    Path(path).write_text(dumps(code))


def read(path: str | Path) -> SecureStorageCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)
