"""m-partitions of n as labels for the irreducible characters.

Irr(G(m,1,n)) is parametrized by m-tuples of partitions with total size
n.  Restriction to G(m,m,n) splits the character labeled by an m-tuple
into s components, where s is the order of its stabilizer under cyclic
rotation of the tuple; a G(m,m,n) label is therefore a rotation-orbit
representative plus a component index below s.  Orbit representatives
are the lexicographically least rotation, so labels serialize
deterministically.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, gcd, prod

from .groups import KIND_A, KIND_G1, KIND_GM, GroupSpec, invariants

__all__ = [
    "CharLabel",
    "all_labels",
    "partitions",
    "m_partitions",
    "conjugate_partition",
    "hook_count",
    "rotate",
    "rotation_orbit_size",
    "canonical_rotation",
    "dimension",
    "exterior_twist_label",
    "galois_twist",
    "dual_label",
    "label_str",
    "parse_label",
]

Partition = tuple[int, ...]
MPartition = tuple[Partition, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, parts weakly decreasing, in a fixed order."""
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def build(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(out)


@lru_cache(maxsize=None)
def m_partitions(m: int, n: int) -> tuple[MPartition, ...]:
    """All m-tuples of partitions with total size n, in a fixed order."""
    if m == 0:
        return ((),) if n == 0 else ()
    out = []
    for k in range(n + 1):
        for lam in partitions(k):
            for rest in m_partitions(m - 1, n - k):
                out.append((lam,) + rest)
    return tuple(out)


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    if n == 0:
        return 1
    prod_hooks = 1
    conj = conjugate_partition(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            prod_hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // prod_hooks


def rotate(parts: MPartition) -> MPartition:
    """One cyclic rotation: component i of the result is old component i-1."""
    return (parts[-1],) + parts[:-1]


def rotation_orbit_size(parts: MPartition) -> int:
    m = len(parts)
    cur = parts
    for k in range(1, m + 1):
        cur = rotate(cur)
        if cur == parts:
            return k
    raise AssertionError("rotation of order m must return to the start")


def canonical_rotation(parts: MPartition) -> MPartition:
    best = parts
    cur = parts
    for _ in range(len(parts) - 1):
        cur = rotate(cur)
        if cur < best:
            best = cur
    return best


@dataclass(frozen=True)
class CharLabel:
    """Label of an irreducible character.

    For G(m,1,n): `parts` is the m-partition itself and `component` is 0.
    For G(m,m,n): `parts` is the canonical rotation-orbit representative
    and `component` indexes one of the s(parts) conjugate constituents of
    the restricted character.
    """

    group: GroupSpec
    parts: MPartition
    component: int = 0

    def __post_init__(self):
        if len(self.parts) != max(self.group.m, 1):
            raise ValueError(
                f"label needs {self.group.m} components, got {len(self.parts)}"
            )
        if sum(sum(p) for p in self.parts) != self.group.n:
            raise ValueError(f"label sizes must sum to n = {self.group.n}")
        if self.group.kind == KIND_GM:
            s = rotation_orbit_stabilizer(self.parts)
            if self.parts != canonical_rotation(self.parts):
                raise ValueError("G(m,m,n) labels use the canonical rotation")
            if not 0 <= self.component < s:
                raise ValueError(f"component index {self.component} out of range")
        elif self.component:
            raise ValueError("component index is only meaningful for G(m,m,n)")

    def __str__(self):
        return label_str(self)


def rotation_orbit_stabilizer(parts: MPartition) -> int:
    """s(parts): how many of the m rotations fix the tuple."""
    return len(parts) // rotation_orbit_size(parts)


def all_labels(g: GroupSpec) -> tuple[CharLabel, ...]:
    if g.kind == KIND_G1:
        return tuple(CharLabel(g, parts) for parts in sorted(m_partitions(g.m, g.n)))
    if g.kind == KIND_GM:
        reps = sorted(
            parts
            for parts in m_partitions(g.m, g.n)
            if parts == canonical_rotation(parts)
        )
        return tuple(
            CharLabel(g, parts, j)
            for parts in reps
            for j in range(rotation_orbit_stabilizer(parts))
        )
    raise ValueError("type A mode has no label pipeline")


def dimension(lab: CharLabel) -> int:
    """Degree of the labeled character."""
    n = lab.group.n
    sizes = [sum(p) for p in lab.parts]
    d = factorial(n)
    for s in sizes:
        d //= factorial(s)
    d *= prod(hook_count(p) for p in lab.parts)
    if lab.group.kind == KIND_GM:
        d //= rotation_orbit_stabilizer(lab.parts)
    return d


def _check_twist(g: GroupSpec, p: int):
    h = invariants(g).coxeter_number
    if gcd(p, h) != 1:
        raise ValueError(f"p = {p} is not coprime to the Coxeter number h = {h}")


def exterior_twist_label(g: GroupSpec, k: int, p: int) -> CharLabel:
    """Label of the k-th exterior power of the p-twisted reflection
    representation: (n-k) in component 0 and a column 1^k in component
    p mod m (everything in component 0 when k = 0)."""
    if not 0 <= k <= g.n:
        raise ValueError(f"exterior power index {k} out of range 0..{g.n}")
    _check_twist(g, p)
    m, n = g.m, g.n
    comps: list[Partition] = [()] * m
    slot = p % m
    if k == 0:
        comps[0] = (n,)
    elif slot == 0:
        comps[0] = tuple([n - k] + [1] * k) if n > k else (1,) * k
    else:
        if n > k:
            comps[0] = (n - k,)
        comps[slot] = (1,) * k
    parts = tuple(comps)
    if g.kind == KIND_GM:
        return CharLabel(g, canonical_rotation(parts), 0)
    return CharLabel(g, parts)


def galois_twist(lab: CharLabel, p: int) -> CharLabel:
    """Move component k to component p*k mod m (the action induced by the
    field automorphism sending each Coxeter-number root of unity to its
    p-th power)."""
    _check_twist(lab.group, p)
    m = lab.group.m
    comps: list[Partition] = [()] * m
    for k, lam in enumerate(lab.parts):
        comps[(p * k) % m] = lam
    parts = tuple(comps)
    if lab.group.kind == KIND_GM:
        return CharLabel(lab.group, canonical_rotation(parts), lab.component)
    return CharLabel(lab.group, parts)


def dual_label(lab: CharLabel) -> CharLabel:
    """Label of the complex-conjugate character: component i of the dual
    is component -i mod m of the original.

    Validated against explicit matrix models (conjugating every character
    value), not derived from a printed formula; see the tableaux module
    tests.
    """
    m = lab.group.m
    parts = tuple(lab.parts[(-i) % m] for i in range(m))
    if lab.group.kind == KIND_GM:
        return CharLabel(lab.group, canonical_rotation(parts), lab.component)
    return CharLabel(lab.group, parts)


def label_str(lab: CharLabel) -> str:
    body = ",".join("(" + ",".join(str(x) for x in p) + ")" for p in lab.parts)
    base = f"[{body}]"
    if lab.group.kind == KIND_GM:
        return f"{base}#{lab.component}"
    return base


def parse_label(g: GroupSpec, text: str) -> CharLabel:
    s = "".join(text.split())
    component = 0
    if "#" in s:
        s, comp = s.rsplit("#", 1)
        component = int(comp)
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"cannot parse label {text!r}")
    body = s[1:-1]
    comps: list[Partition] = []
    depth = 0
    cur = ""
    for ch in body + ",":
        if ch == "," and depth == 0:
            cur = cur.strip()
            if not (cur.startswith("(") and cur.endswith(")")):
                raise ValueError(f"cannot parse label {text!r}")
            inner = cur[1:-1]
            comps.append(tuple(int(x) for x in inner.split(",") if x) if inner else ())
            cur = ""
        else:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            cur += ch
    return CharLabel(g, tuple(comps), component)
