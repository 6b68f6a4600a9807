"""Ray files, fan documents and the bundled data sets."""
from __future__ import annotations

import json
from importlib import resources
from math import comb
from pathlib import Path
from typing import Sequence

from .chirotope import Chirotope, read_chirotope_file
from .dressian import ChirotropicalDressian, IngestionError
from .lineality import quotient_map
from .membership import first_violation, satisfy_eqn_many
from .relations import generate_three_term
from .subsets import PlueckerVector, as_matrix


class FormatError(ValueError):
    """Malformed input file (as opposed to well-formed but invalid data)."""


def parse_ray_text(text: str, source: str = "<string>") -> tuple[int, int, list[PlueckerVector]]:
    """Parse the ``k n m`` header and m coordinate lines; no validation."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise FormatError(f"{source}: empty ray file")
    lineno, header = lines[0]
    try:
        k, n, m = (int(t) for t in header.split())
    except ValueError:
        raise FormatError(f"{source}:{lineno}: header must be 'k n m', got {header!r}") from None
    width = comb(n, k)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"{source}: header announces {m} rays, found {len(body)}")
    rays = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != width:
            raise FormatError(f"{source}:{lineno}: expected {width} integers, got {len(parts)}")
        try:
            coords = tuple(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"{source}:{lineno}: non-integer coordinate") from None
        rays.append(PlueckerVector(k, n, coords))
    return k, n, rays


def ingest_rays(path: str | Path, k: int | None = None, n: int | None = None) -> list[PlueckerVector]:
    """Read and validate a ray file; returns rays in file order.

    Every ray must lie in Dr(k,n) and no two may be positive multiples of
    each other modulo lineality. Diagnostics carry the file line number.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    kk, nn, rays = parse_ray_text(text, str(path))
    if k is not None and (k, n) != (kk, nn):
        raise FormatError(f"{path}: header says (k,n)=({kk},{nn}) but ({k},{n}) was requested")
    # ray i sits on the (i+2)-th non-comment line; recover real line numbers
    data_lines = [
        i for i, ln in enumerate(text.splitlines(), start=1) if ln.split("#", 1)[0].strip()
    ][1:]
    rel = generate_three_term(kk, nn)
    if rays:
        ok = satisfy_eqn_many(as_matrix(rays, kk, nn), rel)
        for i, good in enumerate(ok):
            if not good:
                raise IngestionError(
                    f"{path}:{data_lines[i]}: ray {i} is not in Dr({kk},{nn}); "
                    f"violated relation {first_violation(rays[i], rel)}"
                )
    q = quotient_map(kk, nn)
    seen: dict[tuple[int, ...], int] = {}
    for i, r in enumerate(rays):
        key = q.reduce_primitive(r.coords)
        if not any(key):
            raise IngestionError(f"{path}:{data_lines[i]}: ray {i} lies in the lineality space")
        if key in seen:
            j = seen[key]
            raise IngestionError(
                f"{path}:{data_lines[i]}: ray {i} duplicates ray {j} (line {data_lines[j]}) modulo lineality"
            )
        seen[key] = i
    return rays


def format_rays(rays: Sequence[PlueckerVector]) -> str:
    if not rays:
        raise ValueError("need at least one ray to infer (k,n)")
    k, n = rays[0].k, rays[0].n
    out = [f"{k} {n} {len(rays)}"]
    out.extend(" ".join(str(c) for c in r.coords) for r in rays)
    return "\n".join(out) + "\n"


def write_rays(path: str | Path, rays: Sequence[PlueckerVector]) -> None:
    Path(path).write_text(format_rays(rays))


def fan_document(result: ChirotropicalDressian) -> dict:
    """JSON-ready record of one chirotropical fan.

    ``rays`` maps local ray index to coordinates and ``source_index`` to the
    position in the input ray file; faces refer to local indices.
    """
    fan = result.fan
    chi = result.chirotope
    return {
        "k": chi.k,
        "n": chi.n,
        "chirotope": chi.to_string(),
        "negatives": chi.negative_notation(),
        "rays": {str(i): list(r.coords) for i, r in enumerate(fan.rays)},
        "source_index": {str(i): s for i, s in enumerate(result.source_indices)},
        "faces_by_dim": {str(d): [list(f) for f in faces] for d, faces in fan.faces_by_dim.items()},
        "f_vector": list(fan.f_vector),
        "two_determined": fan.two_determined,
        "pure": result.pure,
    }


def dump_json(obj, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


# --- bundled data -------------------------------------------------------------------

def data_path(name: str) -> Path:
    return Path(str(resources.files("chirotrop") / "data" / name))


def bundled_rays(k: int, n: int) -> list[PlueckerVector]:
    """Rays of Dr(k,n) modulo lineality shipped with the package ((3,6), (3,7))."""
    p = data_path(f"rays_{k}_{n}.txt")
    if not p.exists():
        raise FileNotFoundError(f"no bundled ray file for ({k},{n}); pass one explicitly")
    return ingest_rays(p, k, n)


def bundled_classes(k: int, n: int) -> list[Chirotope]:
    """Isomorphism class representatives in table order ((3,6), (3,7))."""
    p = data_path(f"classes_{k}_{n}.txt")
    if not p.exists():
        raise FileNotFoundError(f"no bundled chirotope catalog for ({k},{n}); pass one explicitly")
    return read_chirotope_file(p, k)
