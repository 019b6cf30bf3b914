"""Group specification mini-language.

Forms:
  perm:m=<points>;gens=<cycles>;<cycles>;...   cycles like (1,2,3)(4,5), 1-based
  suzuki:n=<n>;h=<h>
  heis:q=<prime power>
  agl1:q=<prime power>
  sl2:q=<power of 2>
  gamma:p=<prime>;n=<degree>

`build` returns (FiniteGroup, designated N subgroup or None, echo string).
The designated subgroup is the distinguished center for heis and suzuki;
other forms leave the choice to the caller.
"""

from __future__ import annotations

import re

from .constructions import agl1, heisenberg_gagola, semilinear_group, sl2
from .errors import ParseError
from .groups import DEFAULT_CAP, Perm, generate_group
from .suzuki import suzuki_group

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, m):
    cycles = []
    consumed = "".join(_CYCLE_RE.findall(text))
    stripped = re.sub(r"[\s]", "", text)
    if re.sub(r"[()]", "", stripped) != consumed.replace(" ", ""):
        raise ParseError(f"bad cycle notation: {text!r}")
    for body in _CYCLE_RE.findall(text):
        if not body.strip():
            continue
        pts = []
        for tok in body.split(","):
            try:
                v = int(tok)
            except ValueError as exc:
                raise ParseError(f"bad point {tok!r} in {text!r}") from exc
            if not 1 <= v <= m:
                raise ParseError(f"point {v} outside 1..{m}")
            pts.append(v - 1)
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in cycle {body!r}")
        cycles.append(tuple(pts))
    return cycles


def _fields(body):
    out = {}
    extras = []
    for part in body.split(";"):
        if not part:
            continue
        if "=" in part:
            k, v = part.split("=", 1)
            if k in out:
                extras.append(part)  # gens continuation that contains '='
            else:
                out[k] = v
        else:
            extras.append(part)
    return out, extras


def build(spec, cap=DEFAULT_CAP):
    """Materialize a group from its spec string."""
    spec = spec.strip()
    if ":" not in spec:
        raise ParseError(f"missing kind prefix in {spec!r}")
    kind, body = spec.split(":", 1)
    kind = kind.strip()
    if kind == "perm":
        fields, extras = _fields(body)
        try:
            m = int(fields["m"])
        except (KeyError, ValueError) as exc:
            raise ParseError("perm spec needs m=<points>") from exc
        if "gens" not in fields:
            raise ParseError("perm spec needs gens=<cycles>")
        gen_texts = [fields["gens"]] + extras
        gens = []
        for text in gen_texts:
            cycles = parse_cycles(text, m)
            gens.append(Perm.from_cycles(m, cycles))
        if not gens:
            raise ParseError("no generators given")
        return generate_group(gens, cap=cap), None, spec
    if kind == "suzuki":
        fields, _ = _fields(body)
        try:
            n, h = int(fields["n"]), int(fields["h"])
        except (KeyError, ValueError) as exc:
            raise ParseError("suzuki spec needs n=<n>;h=<h>") from exc
        sz = suzuki_group(n, h, cap=cap)
        return sz.group, sz.n_subgroup(), spec
    if kind == "heis":
        q = _q_of(body)
        G, N = heisenberg_gagola(q, cap=cap)
        return G, N, spec
    if kind == "agl1":
        return agl1(_q_of(body), cap=cap), None, spec
    if kind == "sl2":
        return sl2(_q_of(body), cap=cap), None, spec
    if kind == "gamma":
        fields, _ = _fields(body)
        try:
            p, n = int(fields["p"]), int(fields["n"])
        except (KeyError, ValueError) as exc:
            raise ParseError("gamma spec needs p=<p>;n=<n>") from exc
        return semilinear_group(p, n, cap=cap).group, None, spec
    raise ParseError(f"unknown group kind {kind!r}")


def _q_of(body):
    fields, _ = _fields(body)
    try:
        return int(fields["q"])
    except (KeyError, ValueError) as exc:
        raise ParseError("spec needs q=<prime power>") from exc
