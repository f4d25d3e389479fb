"""Finitely-dependent functions from valuations into a finite carrier.

An element is a total table over carrier^deps, eagerly canonicalized so that
`deps` is exactly the set of atoms the function depends on; structural
equality then coincides with extensional equality.  Values are either
carrier elements (term-like elements) or booleans (truth values); all the
operations below work uniformly except where noted.

Over a one-element carrier every element canonicalizes to a constant; that
degenerate case is deliberately supported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .atoms import Atom, AtomSet, Carrier, Perm
from .errors import ArityError, UnknownSymbolError
from .models import OrdinaryModel, Valuation


@dataclass(frozen=True)
class LiftedElem:
    """Total table over carrier^deps; values in product order, with the last
    dependency varying fastest."""

    carrier: tuple[int, ...]
    deps: tuple[Atom, ...]
    values: tuple

    def __post_init__(self) -> None:
        if len(self.values) != len(self.carrier) ** len(self.deps):
            raise ValueError("table size does not match carrier^deps")
        if any(a.index >= b.index for a, b in zip(self.deps, self.deps[1:])):
            raise ValueError("deps must be strictly ascending")


def _canonical(carrier: tuple[int, ...], deps: tuple[Atom, ...], values: tuple) -> LiftedElem:
    """Drop every coordinate the table does not genuinely depend on."""
    k = len(carrier)
    n = len(deps)
    if n == 0 or k == 1:
        return LiftedElem(carrier, (), (values[0],))
    relevant: list[int] = []
    for i in range(n):
        stride = k ** (n - 1 - i)
        block = stride * k
        found = False
        for base in range(0, len(values), block):
            for off in range(base, base + stride):
                first = values[off]
                if any(values[off + d * stride] != first for d in range(1, k)):
                    found = True
                    break
            if found:
                break
        if found:
            relevant.append(i)
    if len(relevant) == n:
        return LiftedElem(carrier, deps, values)
    new_deps = tuple(deps[i] for i in relevant)
    strides = [k ** (n - 1 - i) for i in relevant]
    new_values = []
    for t in itertools.product(range(k), repeat=len(new_deps)):
        new_values.append(values[sum(p * s for p, s in zip(t, strides))])
    return LiftedElem(carrier, new_deps, tuple(new_values))


def canonicalize(f: LiftedElem) -> LiftedElem:
    return _canonical(f.carrier, f.deps, f.values)


def _build(
    carrier: tuple[int, ...],
    deps: tuple[Atom, ...],
    fn: Callable[[tuple[int, ...]], object],
) -> LiftedElem:
    values = tuple(fn(t) for t in itertools.product(range(len(carrier)), repeat=len(deps)))
    return _canonical(carrier, deps, values)


def const_lift(carrier: Sequence[int], value) -> LiftedElem:
    return LiftedElem(tuple(carrier), (), (value,))


def top_lift(carrier: Sequence[int]) -> LiftedElem:
    return const_lift(carrier, True)


def bot_lift(carrier: Sequence[int]) -> LiftedElem:
    return const_lift(carrier, False)


def atm_lift(carrier: Sequence[int], a: Atom) -> LiftedElem:
    """The projection reading off the valuation at a."""
    carrier = tuple(carrier)
    return _canonical(carrier, (a,), carrier)


def eval_at(f: LiftedElem, v: Valuation) -> object:
    """Apply the function to a valuation covering its dependencies."""
    k = len(f.carrier)
    idx = 0
    for a in f.deps:
        value = v.lookup(a)
        try:
            pos = f.carrier.index(value)
        except ValueError:
            raise ValueError(f"valuation value {value} outside carrier") from None
        idx = idx * k + pos
    return f.values[idx]


def perm_act_lift(p: Perm, f: LiftedElem) -> LiftedElem:
    """(p . f)(v) = f(p^-1 . v): rename the dependencies along p."""
    if not f.deps:
        return f
    images = [p(a) for a in f.deps]
    order = sorted(range(len(images)), key=lambda i: images[i].index)
    new_deps = tuple(images[i] for i in order)
    source_pos = [0] * len(order)
    for new_position, i in enumerate(order):
        source_pos[i] = new_position
    k = len(f.carrier)

    def fn(t: tuple[int, ...]):
        idx = 0
        for i in range(len(f.deps)):
            idx = idx * k + t[source_pos[i]]
        return f.values[idx]

    # A bijective renaming of coordinates cannot create spurious ones.
    values = tuple(fn(t) for t in itertools.product(range(k), repeat=len(new_deps)))
    return LiftedElem(f.carrier, new_deps, values)


def sub_lift(f: LiftedElem, a: Atom, g: LiftedElem) -> LiftedElem:
    """f[a := g], pointwise: evaluate g first, then feed it to f at a."""
    if f.carrier != g.carrier:
        raise ValueError("substitution across different carriers")
    if a not in f.deps:
        return f
    carrier = f.carrier
    k = len(carrier)
    deps = tuple((AtomSet(f.deps) - AtomSet.of(a)) | AtomSet(g.deps))
    pos = {b.index: i for i, b in enumerate(deps)}
    g_sources = [pos[b.index] for b in g.deps]
    f_sources = [None if b == a else pos[b.index] for b in f.deps]
    elem_pos = {x: i for i, x in enumerate(carrier)}

    def fn(t: tuple[int, ...]):
        g_idx = 0
        for s in g_sources:
            g_idx = g_idx * k + t[s]
        g_pos = elem_pos[g.values[g_idx]]
        idx = 0
        for s in f_sources:
            idx = idx * k + (g_pos if s is None else t[s])
        return f.values[idx]

    return _build(carrier, deps, fn)


def le_lift(f: LiftedElem, g: LiftedElem) -> bool:
    """Pointwise implication of boolean tables, over the union of deps."""
    if f.carrier != g.carrier:
        raise ValueError("comparison across different carriers")
    k = len(f.carrier)
    deps = tuple(AtomSet(f.deps) | AtomSet(g.deps))
    pos = {b.index: i for i, b in enumerate(deps)}
    f_sources = [pos[b.index] for b in f.deps]
    g_sources = [pos[b.index] for b in g.deps]
    for t in itertools.product(range(k), repeat=len(deps)):
        f_idx = 0
        for s in f_sources:
            f_idx = f_idx * k + t[s]
        if not f.values[f_idx]:
            continue
        g_idx = 0
        for s in g_sources:
            g_idx = g_idx * k + t[s]
        if not g.values[g_idx]:
            return False
    return True


def neg_lift(f: LiftedElem) -> LiftedElem:
    # Negation preserves which coordinates matter, so no re-canonicalization.
    return LiftedElem(f.carrier, f.deps, tuple(not v for v in f.values))


def fresh_glb_lift(
    carrier: Sequence[int], fresh: Iterable[Atom], xs: Sequence[LiftedElem]
) -> LiftedElem:
    """Greatest lower bound of xs among elements not depending on `fresh`:
    meet over all values the fresh atoms could take."""
    carrier = tuple(carrier)
    k = len(carrier)
    fresh = AtomSet(fresh)
    fresh_list = tuple(fresh)
    fresh_pos = {a.index: i for i, a in enumerate(fresh_list)}
    deps = tuple(AtomSet(a for x in xs for a in x.deps) - fresh)
    pos = {b.index: i for i, b in enumerate(deps)}

    plans = []
    for x in xs:
        if x.carrier != carrier:
            raise ValueError("meet across different carriers")
        bound_positions = [b.index in fresh_pos for b in x.deps]
        sources = [
            fresh_pos[b.index] if b.index in fresh_pos else pos[b.index] for b in x.deps
        ]
        arity = sum(bound_positions)
        plans.append((x, bound_positions, sources, arity))

    def fn(t: tuple[int, ...]):
        for x, bound_positions, sources, arity in plans:
            for assign in itertools.product(range(k), repeat=arity):
                idx = 0
                bound_i = 0
                for is_bound, s in zip(bound_positions, sources):
                    if is_bound:
                        idx = idx * k + assign[bound_i]
                        bound_i += 1
                    else:
                        idx = idx * k + t[s]
                if not x.values[idx]:
                    return False
        return True

    return _build(carrier, deps, fn)


def lift_fn(model: OrdinaryModel, name: str, args: Sequence[LiftedElem]) -> LiftedElem:
    """Pointwise application of a model's function table."""
    if name not in model.funs:
        raise UnknownSymbolError(f"model interprets no term former {name!r}")
    table = model.funs[name]
    arity = len(next(iter(table)))
    if len(args) != arity:
        raise ArityError(f"{name} expects {arity} arguments, got {len(args)}")
    return _apply_table(model.carrier, table, args)


def lift_pred(model: OrdinaryModel, name: str, args: Sequence[LiftedElem]) -> LiftedElem:
    """Pointwise application of a model's predicate table."""
    if name not in model.preds:
        raise UnknownSymbolError(f"model interprets no predicate {name!r}")
    table = model.preds[name]
    arity = len(next(iter(table)))
    if len(args) != arity:
        raise ArityError(f"{name} expects {arity} arguments, got {len(args)}")
    return _apply_table(model.carrier, table, args)


def _apply_table(carrier: tuple[int, ...], table, args: Sequence[LiftedElem]) -> LiftedElem:
    k = len(carrier)
    for x in args:
        if x.carrier != carrier:
            raise ValueError("application across different carriers")
    deps = tuple(AtomSet(a for x in args for a in x.deps))
    pos = {b.index: i for i, b in enumerate(deps)}
    sources = [[pos[b.index] for b in x.deps] for x in args]

    def fn(t: tuple[int, ...]):
        key = []
        for x, srcs in zip(args, sources):
            idx = 0
            for s in srcs:
                idx = idx * k + t[s]
            key.append(x.values[idx])
        return table[tuple(key)]

    return _build(carrier, deps, fn)


def dump_lifted(f: LiftedElem) -> str:
    """Debug dump: a deps line, then one `[ids] -> value` line per row."""
    lines = ["deps: " + ",".join(a.name for a in f.deps)]
    rows = itertools.product(range(len(f.carrier)), repeat=len(f.deps))
    for value, t in zip(f.values, rows):
        ids = ",".join(str(f.carrier[p]) for p in t)
        shown = ("T" if value else "F") if isinstance(value, bool) else str(value)
        lines.append(f"[{ids}] -> {shown}")
    return "\n".join(lines)


def enumerate_lifted(
    carrier: Sequence[int], pool: Sequence[Atom], values: Sequence
) -> list[LiftedElem]:
    """All canonical elements with deps inside `pool` and entries from
    `values`, in a deterministic order."""
    carrier = tuple(carrier)
    pool = tuple(AtomSet(pool))
    seen: set[LiftedElem] = set()
    out: list[LiftedElem] = []
    size = len(carrier) ** len(pool)
    if len(tuple(values)) ** size > 1_000_000:
        raise OverflowError(
            f"{len(tuple(values))}**{size} candidate tables is too many to enumerate"
        )
    for table in itertools.product(tuple(values), repeat=size):
        elem = _canonical(carrier, pool, table)
        if elem not in seen:
            seen.add(elem)
            out.append(elem)
    out.sort(key=lambda e: (len(e.deps), tuple(a.index for a in e.deps), e.values))
    return out


def lifted_carrier(carrier: Sequence[int]) -> Carrier[LiftedElem]:
    carrier = tuple(carrier)
    return Carrier(
        name=f"lifted[{len(carrier)}]",
        act=perm_act_lift,
        eq=lambda x, y: x == y,
        support_bound=lambda f: AtomSet(f.deps),
    )
