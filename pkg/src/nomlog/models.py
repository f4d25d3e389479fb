"""Finite first-order models with total tables, and finite valuations.

The model file format is line oriented:

    carrier 0 1
    fun f: (0)->1 (1)->0
    pred P: 0            # lists the tuples where P holds
    pred Q/2: (0,1)      # optional /arity annotation (required when empty)

Function tables must be total; predicate blocks list the true tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .atoms import Atom, AtomSet, Perm
from .errors import ModelFormatError, UnboundAtomError, UnknownSymbolError
from .syntax import All, And, App, Bot, Formula, Neg, Pred, Signature, Term, Var


class OrdinaryModel:
    """Nonempty finite carrier plus total interpretation tables."""

    def __init__(
        self,
        carrier: Iterable[int],
        funs: Mapping[str, Mapping[tuple[int, ...], int]] | None = None,
        preds: Mapping[str, Mapping[tuple[int, ...], bool]] | None = None,
    ) -> None:
        self.carrier = tuple(carrier)
        if not self.carrier:
            raise ModelFormatError("carrier must be nonempty")
        if len(set(self.carrier)) != len(self.carrier):
            raise ModelFormatError("carrier elements must be distinct")
        self.funs = {name: dict(table) for name, table in (funs or {}).items()}
        self.preds = {name: dict(table) for name, table in (preds or {}).items()}
        for name, table in self.funs.items():
            self._check_total(name, table)
            for args, value in table.items():
                if value not in self.carrier:
                    raise ModelFormatError(f"fun {name}: value {value} outside carrier")
        for name, table in self.preds.items():
            self._check_total(name, table)

    def _check_total(self, name: str, table: Mapping[tuple[int, ...], object]) -> None:
        if not table:
            raise ModelFormatError(f"empty table for {name}")
        arity = len(next(iter(table)))
        expected = set(itertools.product(self.carrier, repeat=arity))
        if set(table) != expected:
            raise ModelFormatError(f"table for {name} is not total over carrier^{arity}")

    def signature(self) -> Signature:
        return Signature(
            funs={name: len(next(iter(t))) for name, t in self.funs.items()},
            preds={name: len(next(iter(t))) for name, t in self.preds.items()},
        )

    def fun_value(self, name: str, args: tuple[int, ...]) -> int:
        if name not in self.funs:
            raise UnknownSymbolError(f"model interprets no term former {name!r}")
        return self.funs[name][args]

    def pred_value(self, name: str, args: tuple[int, ...]) -> bool:
        if name not in self.preds:
            raise UnknownSymbolError(f"model interprets no predicate {name!r}")
        return self.preds[name][args]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrdinaryModel):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.funs == other.funs
            and self.preds == other.preds
        )

    def __repr__(self) -> str:
        return f"OrdinaryModel(carrier={self.carrier!r}, funs={self.funs!r}, preds={self.preds!r})"


@dataclass(frozen=True)
class Valuation:
    """Finite partial map from atoms to carrier elements."""

    assignments: tuple[tuple[Atom, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Atom, int] | Iterable[tuple[Atom, int]]) -> "Valuation":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        by_index = {a.index: (a, x) for a, x in items}
        return cls(tuple(by_index[i] for i in sorted(by_index)))

    def lookup(self, a: Atom) -> int:
        for b, x in self.assignments:
            if b == a:
                return x
        raise UnboundAtomError(f"valuation does not bind atom {a}")

    def update(self, a: Atom, x: int) -> "Valuation":
        kept = tuple(item for item in self.assignments if item[0] != a)
        return Valuation.of((*kept, (a, x)))

    def domain(self) -> AtomSet:
        return AtomSet(a for a, _ in self.assignments)

    def act(self, p: Perm) -> "Valuation":
        """(p . v)(a) = v(p^-1(a)), i.e. rename the domain along p."""
        return Valuation.of(tuple((p(a), x) for a, x in self.assignments))

    def __str__(self) -> str:
        return ", ".join(f"{a}={x}" for a, x in self.assignments)


def val_update(v: Valuation, a: Atom, x: int) -> Valuation:
    return v.update(a, x)


def eval_term(model: OrdinaryModel, v: Valuation, r: Term) -> int:
    match r:
        case Var(a):
            value = v.lookup(a)
            if value not in model.carrier:
                raise ModelFormatError(f"valuation value {value} outside carrier")
            return value
        case App(former, args):
            return model.fun_value(former, tuple(eval_term(model, v, s) for s in args))
    raise TypeError(f"not a term: {r!r}")


def eval_formula(model: OrdinaryModel, v: Valuation, f: Formula) -> bool:
    match f:
        case Bot():
            return False
        case Pred(former, args):
            return model.pred_value(former, tuple(eval_term(model, v, s) for s in args))
        case And(l, r):
            return eval_formula(model, v, l) and eval_formula(model, v, r)
        case Neg(b):
            return not eval_formula(model, v, b)
        case All(a, b):
            return all(eval_formula(model, v.update(a, x), b) for x in model.carrier)
    raise TypeError(f"not a formula: {f!r}")


def all_valuations(atoms: Iterable[Atom], carrier: tuple[int, ...]) -> Iterator[Valuation]:
    """Every valuation on the given atoms, in ascending lexicographic order."""
    atoms = tuple(AtomSet(atoms))
    for values in itertools.product(carrier, repeat=len(atoms)):
        yield Valuation.of(zip(atoms, values))


# -- model files -------------------------------------------------------------

_FUN_ENTRY = re.compile(r"\(([0-9,\s]*)\)\s*->\s*(\d+)")
_PRED_ENTRY = re.compile(r"\(([0-9,\s]*)\)|(\d+)")
_HEADER = re.compile(r"(fun|pred)\s+([A-Za-z_][A-Za-z0-9_]*)(?:\s*/\s*(\d+))?\s*:(.*)")


def _parse_tuple(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def load_model(text: str, sig: Signature | None = None) -> OrdinaryModel:
    carrier: tuple[int, ...] | None = None
    funs: dict[str, dict[tuple[int, ...], int]] = {}
    preds: dict[str, dict[tuple[int, ...], bool]] = {}
    pred_extensions: dict[str, tuple[int | None, list[tuple[int, ...]]]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("carrier"):
            if carrier is not None:
                raise ModelFormatError(f"line {lineno}: duplicate carrier line")
            try:
                carrier = tuple(int(tok) for tok in line[len("carrier") :].split())
            except ValueError:
                raise ModelFormatError(f"line {lineno}: bad carrier line {raw.strip()!r}") from None
            continue
        m = _HEADER.fullmatch(line)
        if not m:
            raise ModelFormatError(f"line {lineno}: unrecognized line {raw.strip()!r}")
        kind, name, arity_text, payload = m.groups()
        declared_arity = int(arity_text) if arity_text is not None else None
        if kind == "fun":
            if name in funs:
                raise ModelFormatError(f"line {lineno}: duplicate block for fun {name}")
            entries = list(_FUN_ENTRY.finditer(payload))
            if _FUN_ENTRY.sub("", payload).replace(",", " ").strip():
                raise ModelFormatError(f"line {lineno}: bad entries in fun {name} block")
            table: dict[tuple[int, ...], int] = {}
            for entry in entries:
                args = _parse_tuple(entry.group(1))
                if declared_arity is not None and len(args) != declared_arity:
                    raise ModelFormatError(f"line {lineno}: fun {name} entry of wrong arity")
                if args in table:
                    raise ModelFormatError(f"line {lineno}: duplicate entry for fun {name}{args}")
                table[args] = int(entry.group(2))
            if not table:
                raise ModelFormatError(f"line {lineno}: fun {name} has no entries")
            funs[name] = table
        else:
            if name in pred_extensions:
                raise ModelFormatError(f"line {lineno}: duplicate block for pred {name}")
            tuples: list[tuple[int, ...]] = []
            for entry in _PRED_ENTRY.finditer(payload):
                tuples.append(
                    _parse_tuple(entry.group(1)) if entry.group(1) is not None
                    else (int(entry.group(2)),)
                )
            if _PRED_ENTRY.sub("", payload).replace(",", " ").strip():
                raise ModelFormatError(f"line {lineno}: bad entries in pred {name} block")
            pred_extensions[name] = (declared_arity, tuples)

    if carrier is None:
        raise ModelFormatError("model file has no carrier line")

    for name, (declared_arity, tuples) in pred_extensions.items():
        if declared_arity is None:
            if not tuples:
                raise ModelFormatError(
                    f"pred {name}: empty extension needs an explicit /arity annotation"
                )
            declared_arity = len(tuples[0])
        for t in tuples:
            if len(t) != declared_arity:
                raise ModelFormatError(f"pred {name}: entry {t} of wrong arity")
        true_set = set(tuples)
        preds[name] = {
            args: args in true_set for args in itertools.product(carrier, repeat=declared_arity)
        }

    model = OrdinaryModel(carrier, funs, preds)
    if sig is not None:
        derived = model.signature()
        if derived.funs != sig.funs or derived.preds != sig.preds:
            raise ModelFormatError("model tables do not match the declared signature")
    return model


def dump_model(model: OrdinaryModel) -> str:
    lines = ["carrier " + " ".join(str(x) for x in model.carrier)]
    for name in sorted(model.funs):
        table = model.funs[name]
        entries = " ".join(
            f"({','.join(str(a) for a in args)})->{table[args]}" for args in sorted(table)
        )
        arity = len(next(iter(table)))
        lines.append(f"fun {name}/{arity}: {entries}".rstrip())
    for name in sorted(model.preds):
        table = model.preds[name]
        arity = len(next(iter(table)))
        true_tuples = [args for args in sorted(table) if table[args]]
        entries = " ".join(
            str(args[0]) if arity == 1 else f"({','.join(str(a) for a in args)})"
            for args in true_tuples
        )
        lines.append(f"pred {name}/{arity}: {entries}".rstrip())
    return "\n".join(lines) + "\n"
