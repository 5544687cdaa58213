"""The AFP text format: prolog-style facts for partitioned frameworks.

Grammar, one statement per line::

    arg(NAME).            declare an argument
    att(NAME,NAME).       attacker, target
    focus(NAME).          the selected agent owns NAME
    restricted(NAME).     NAME is a restricted focus argument (implies focus)

``NAME`` matches ``[A-Za-z0-9_]+``. ``#`` starts a comment running to the
end of the line; blank lines are skipped; whitespace is tolerated inside
and around statements. Statements may appear in any order. A file with no
focus/restricted statements denotes the vacuous partition: the focus is the
whole argument universe, with nothing restricted. Repeated statements are
idempotent; any other statement form is a hard error.
"""

import re

from .errors import AfpSyntaxError, UndeclaredArgument
from .model import (ArgumentationFramework, Partition, build_framework,
                    build_partition)

_STATEMENT = re.compile(
    r"^(?P<kind>arg|att|focus|restricted)\s*\(\s*(?P<first>[A-Za-z0-9_]+)"
    r"\s*(?:,\s*(?P<second>[A-Za-z0-9_]+)\s*)?\)\s*\.$")


def parse_afp(text: str) -> tuple:
    """Parse AFP text into a framework and partition.

    Syntax problems raise :class:`AfpSyntaxError`; statements naming an
    argument never declared anywhere in the file raise
    :class:`UndeclaredArgument`. Both carry the offending line number.
    """
    names = []
    declared = set()
    attacks = []   # (line, a, b)
    focus = []     # (line, name)
    restricted = []
    saw_partition = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _STATEMENT.match(line)
        if m is None:
            raise AfpSyntaxError(f"unrecognized statement {line!r}", lineno)
        kind, first, second = m.group("kind", "first", "second")
        if kind == "att":
            if second is None:
                raise AfpSyntaxError("att needs two arguments", lineno)
            attacks.append((lineno, first, second))
            continue
        if second is not None:
            raise AfpSyntaxError(f"{kind} takes a single argument", lineno)
        if kind == "arg":
            if first not in declared:
                declared.add(first)
                names.append(first)
        elif kind == "focus":
            saw_partition = True
            focus.append((lineno, first))
        else:
            saw_partition = True
            restricted.append((lineno, first))
    for lineno, a, b in attacks:
        for name in (a, b):
            if name not in declared:
                raise UndeclaredArgument(name, line=lineno)
    for lineno, name in focus + restricted:
        if name not in declared:
            raise UndeclaredArgument(name, line=lineno)
    af = build_framework(names, [(a, b) for _, a, b in attacks])
    if saw_partition:
        p = build_partition(af, [name for _, name in focus],
                            [name for _, name in restricted])
    else:
        p = build_partition(af, names, [])
    return af, p


def serialize_afp(af: ArgumentationFramework, p: Partition = None) -> str:
    """Emit canonical AFP text.

    Arguments appear in index order, attacks sorted by name pair, then
    focus statements for the unrestricted part and restricted statements
    for the restricted part (both name-sorted). A vacuous partition (no
    partition, or focus = everything with nothing restricted) emits no
    partition statements at all, which is what it parses back from.
    """
    lines = [f"# {len(af.names)} arguments, {len(af.attacks)} attacks"]
    for name in af.names:
        lines.append(f"arg({name}).")
    for a, b in sorted((af.names[a], af.names[b]) for a, b in af.attacks):
        lines.append(f"att({a},{b}).")
    vacuous = p is None or (p.focus.mask == af.full_mask
                            and not p.restricted.mask)
    if not vacuous:
        for name in sorted(p.unrestricted.names):
            lines.append(f"focus({name}).")
        for name in sorted(p.restricted.names):
            lines.append(f"restricted({name}).")
    return "\n".join(lines) + "\n"
