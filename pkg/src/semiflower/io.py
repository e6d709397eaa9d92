"""Text formats: generator files, automaton files, DOT, report blocks and CSV rows.

Generator file::

    # optional comments
    ab          <- alphabet, distinct characters
    a
    ba          <- one generator per line

Automaton file::

    alphabet ab
    states 2
    initial 0
    final 0
    0 a 0
    0 b 1
    1 a 0
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Optional

from .automaton import Automaton
from .bpr import Bpr, KappaProfile
from .errors import EmptyAlphabet, EmptyWord, InvalidAutomaton, ParseError, UnknownLetter
from .sfa import GeneratorSet

log = logging.getLogger(__name__)

# spellings of an explicitly declared empty generator
EMPTY_MARKERS = ('""', "''", "\u03b5")

CSV_VERSION = "semiflower-sweep/1"
CSV_COLUMNS = (
    "generators_h", "generators_k", "classification", "m",
    "rank_h", "rank_k", "rank_hk", "S", "bound", "sufficient", "hnp",
)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        yield number, line


def parse_generators(text: str, path=None) -> GeneratorSet:
    alphabet = None
    words, seen = [], set()
    for number, line in _content_lines(text):
        if alphabet is None:
            if not line:
                continue
            if len(set(line)) != len(line):
                raise ParseError(f"duplicate letters in alphabet {line!r}", number, path)
            alphabet = line
            continue
        if not line:
            continue
        if line in EMPTY_MARKERS:
            raise EmptyWord("the empty word cannot be a generator", number, path)
        for ch in line:
            if ch not in alphabet:
                raise UnknownLetter(ch, number, path)
        if line in seen:
            log.warning("%s:%d: duplicate generator %r ignored", path or "<input>", number, line)
            continue
        seen.add(line)
        words.append(line)
    if not alphabet:
        raise EmptyAlphabet("no alphabet line", path=path)
    return GeneratorSet(alphabet, frozenset(words))


def parse_generator_file(path) -> GeneratorSet:
    path = Path(path)
    return parse_generators(path.read_text(encoding="utf-8"), path)


def format_generators(x: GeneratorSet) -> str:
    return "\n".join([x.alphabet, *x.sorted_words]) + "\n"


def looks_like_automaton(text: str) -> bool:
    for _, line in _content_lines(text):
        if line:
            return line.split()[0] in ("alphabet", "states")
    return False


def parse_automaton(text: str, path=None) -> Automaton:
    header = {}
    transitions = []
    for number, line in _content_lines(text):
        if not line:
            continue
        fields = line.split()
        key = fields[0]
        if key in ("alphabet", "states", "initial", "final"):
            if key in header:
                raise ParseError(f"repeated {key!r} line", number, path)
            header[key] = (number, fields[1:])
            continue
        if len(fields) != 3:
            raise ParseError(f"expected 'source letter target', got {line!r}", number, path)
        p, letter, q = fields
        if len(letter) != 1:
            raise ParseError(f"letters are single characters, got {letter!r}", number, path)
        try:
            transitions.append((int(p), letter, int(q), number))
        except ValueError:
            raise ParseError(f"state ids must be integers in {line!r}", number, path) from None
    for key in ("alphabet", "states"):
        if key not in header:
            raise ParseError(f"missing {key!r} line", path=path)
    number, fields = header["alphabet"]
    if len(fields) != 1:
        raise EmptyAlphabet("alphabet line needs exactly one string of letters", number, path)
    alphabet = fields[0]
    number, fields = header["states"]
    try:
        (n_states,) = map(int, fields)
    except ValueError:
        raise ParseError("states line needs one integer", number, path) from None

    def ids(key):
        if key not in header:
            return []
        number, fields = header[key]
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"{key} line needs integer state ids", number, path) from None

    for p, letter, q, number in transitions:
        if letter not in alphabet:
            raise UnknownLetter(letter, number, path)
    try:
        return Automaton(alphabet, n_states, ids("initial"), ids("final"),
                         {(p, letter, q) for p, letter, q, _ in transitions})
    except InvalidAutomaton as exc:
        raise ParseError(str(exc), path=path) from None


def parse_automaton_file(path) -> Automaton:
    path = Path(path)
    return parse_automaton(path.read_text(encoding="utf-8"), path)


def format_automaton(a: Automaton, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    if a.pairs is not None:
        lines.append("# pairs " + " ".join(f"{i}=({p},{q})" for i, (p, q) in enumerate(a.pairs)))
    lines += [
        f"alphabet {a.alphabet}",
        f"states {a.n_states}",
        " ".join(["initial", *map(str, sorted(a.initial))]),
        " ".join(["final", *map(str, sorted(a.final))]),
    ]
    lines += [f"{p} {x} {q}" for p, x, q in a.sorted_transitions]
    return "\n".join(lines) + "\n"


def _dot_id(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def automaton_to_dot(a: Automaton, name: str = "automaton") -> str:
    out = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;"]
    for q in a.states:
        shape = "doublecircle" if q in a.final else "circle"
        label = str(q) if a.pairs is None else f"{q} {a.pairs[q]}"
        out.append(f"  {_dot_id(q)} [shape={shape} label={_dot_id(label)}];")
    for q in sorted(a.initial):
        out.append(f"  {_dot_id(f'start{q}')} [shape=point];")
        out.append(f"  {_dot_id(f'start{q}')} -> {_dot_id(q)};")
    for p, x, q in a.sorted_transitions:
        out.append(f"  {_dot_id(p)} -> {_dot_id(q)} [label={_dot_id(x)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def bpr_to_dot(b: Bpr, name: str = "bpr") -> str:
    """One edge per (source, target) pair, listing its labels and multiplicity."""
    out = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;"]
    for v in b.nodes:
        shape = "doublecircle" if v == b.q0 else "circle"
        out.append(f"  {_dot_id(v)} [shape={shape}];")
    grouped = {}
    for arc in b.arcs:
        grouped.setdefault((arc.source, arc.target), []).append(arc.label)
    for (p, q), labels in sorted(grouped.items()):
        label = ", ".join(labels) + (f" (x{len(labels)})" if len(labels) > 1 else "")
        out.append(f"  {_dot_id(p)} -> {_dot_id(q)} [label={_dot_id(label)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def format_profile(p: KappaProfile) -> str:
    if not p.m:
        return "bpis: none\n"
    lines = [f"bpis (topological order): {' '.join(map(str, p.nodes or range(1, p.m + 1)))}"]
    lines.append("kappa: " + " ".join(map(str, p.kappa)))
    lines.append("kappa_bar: " + " ".join(map(str, p.kappa_bar)))
    lines.append("kappa_matrix:")
    lines += ["  " + " ".join(f"{x:>3}" for x in row) for row in p.kappa_matrix]
    return "\n".join(lines) + "\n"


def format_bpr(b: Bpr) -> str:
    lines = [f"root: {b.q0}", f"nodes: {' '.join(map(str, b.nodes))}", f"arcs: {len(b.arcs)}"]
    lines += [f"  {arc.source} -{arc.label}-> {arc.target}" for arc in b.arcs]
    return "\n".join(lines) + "\n"


def format_rank_report(report, checks: Iterable[tuple] = ()) -> str:
    lines = [
        f"rank: {report.rank_value}",
        f"exact: {'yes' if report.exact else 'no (upper bound)'}",
        f"reduced rank: {report.reduced_rank}",
        f"simple cycles: {report.cycle_count}",
        f"bpis: {report.m}",
    ]
    if report.breakdown:
        lines.append("per-bpi contributions: " + " ".join(map(str, report.breakdown)))
    if report.generator_count is not None:
        lines.append(f"minimal generators: {report.generator_count}")
    for name, check in checks:
        lines.append(f"{name}: lhs={check.lhs} rhs={check.rhs} {'holds' if check.holds else 'FAILS'}")
    return "\n".join(lines) + "\n"


def _words(x: GeneratorSet) -> str:
    return " ".join(x.sorted_words)


def _opt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def format_hnp_report(r) -> str:
    lines = [
        f"H generators: {{{', '.join(r.generators_h.sorted_words)}}}",
        f"K generators: {{{', '.join(r.generators_k.sorted_words)}}}",
        f"classification: {r.classification}",
        f"rank H: {r.rank_h} (reduced {r.reduced_h})",
        f"rank K: {r.rank_k} (reduced {r.reduced_k})",
        f"trimmed product: {r.product.n_states} states, {len(r.product.transitions)} transitions",
        f"product bpis: {_opt(r.m)}",
        f"rank H&K: {_opt(r.rank_intersection)}" + ("" if r.exact else " (upper bound)"),
        f"correction term S: {_opt(r.correction_term)}",
        f"bound S + rk~(H) rk~(K): {_opt(r.ghn_bound)}",
        f"sufficient condition: {_opt(r.sufficient_condition)}",
        f"inequality holds: {_opt(r.hnp_holds)}",
    ]
    if r.detail:
        lines.append(f"note: {r.detail}")
    return "\n".join(lines) + "\n"


def csv_header() -> str:
    return f"# {CSV_VERSION}\n" + ",".join(CSV_COLUMNS) + "\n"


def csv_row(r) -> str:
    def cell(v):
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    return ",".join(cell(v) for v in (
        _words(r.generators_h), _words(r.generators_k), str(r.classification), r.m,
        r.rank_h, r.rank_k, r.rank_intersection, r.correction_term, r.ghn_bound,
        r.sufficient_condition, r.hnp_holds,
    )) + "\n"
