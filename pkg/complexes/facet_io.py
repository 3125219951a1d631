# complexes/facet_io.py
"""
Facet file format.

    # comment
    n 6
    1 3 5
    2 4 6

One facet per line, whitespace-separated positive integers, `#` comments.
The `n <count>` header is optional; without it n is the largest vertex seen.
"""

from pathlib import Path

from core.exceptions import ParseError
from .simplicial import from_facets


def parse_facets(text, provenance="", strict=True):
    n = None
    faces = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None or faces or len(tokens) != 2:
                raise ParseError(f"line {lineno}: misplaced or malformed 'n' header")
            n = _positive_int(tokens[1], lineno)
            continue
        faces.append(tuple(_positive_int(token, lineno) for token in tokens))

    if not faces:
        raise ParseError("no facets found")
    largest = max(max(face) for face in faces)
    if n is None:
        n = largest
    elif largest > n:
        raise ParseError(f"vertex {largest} exceeds declared n={n}")
    return from_facets(n, faces, provenance=provenance, strict=strict)


def _positive_int(token, lineno):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: '{token}' is not an integer") from None
    if value < 1:
        raise ParseError(f"line {lineno}: vertex labels must be positive, got {value}")
    return value


def read_facet_file(path, strict=True):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason} at byte {exc.start}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_facets(text, provenance=path.name, strict=strict)


def format_facets(complex_):
    lines = []
    if complex_.provenance:
        lines.append(f"# {complex_.provenance}")
    lines.append(f"n {complex_.n}")
    lines.extend(" ".join(str(v) for v in facet) for facet in complex_.facet_sets())
    return "\n".join(lines) + "\n"
