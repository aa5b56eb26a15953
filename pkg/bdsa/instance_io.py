"""Line-oriented instance file format.

::

    # comment
    atoms a b c
    labels x y
    act x a = {b,c}      # θ_x({a}); omitted lines mean ∅
    ideal x = {a,b}      # optional top of I_x
    J = {a}              # optional top of J

Declaration order of atoms and labels is canonical. Errors carry the
1-based line number.
"""

import logging
import re
from typing import Iterable, Optional

from .bds import build_instance
from .boolcore import parse_element, render_element
from .errors import BDSAError, DuplicateDeclaration, MalformedSyntax, UnknownLabel
from .schemas.algebra import IDENTIFIER, AtomUniverse, Instance, InstanceSpec

logger = logging.getLogger(__name__)

_ACT = re.compile(r"^act\s+(\S+)\s+(\S+)\s*=\s*(.*?)\s*$")
_IDEAL = re.compile(r"^ideal\s+(\S+)\s*=\s*(.*?)\s*$")
_J = re.compile(r"^J\s*=\s*(.*?)\s*$")


def _names(tokens, line_no):
    seen = set()
    for name in tokens:
        if not IDENTIFIER.match(name):
            raise MalformedSyntax(f"invalid identifier {name!r}", line=line_no)
        if name in seen:
            raise DuplicateDeclaration(name, line=line_no)
        seen.add(name)
    return list(tokens)


def parse_instance_text(text: str) -> InstanceSpec:
    spec = InstanceSpec()
    universe: Optional[AtomUniverse] = None
    seen_labels = False

    def element(raw_line, match, group, line_no):
        try:
            return parse_element(universe, match.group(group))
        except MalformedSyntax as e:
            offset = len(raw_line) - len(raw_line.lstrip()) + match.start(group)
            raise MalformedSyntax(
                "malformed element", position=(e.position or 0) + offset, line=line_no
            )

    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.strip()
        if not stripped:
            continue
        keyword = stripped.split()[0]
        try:
            if keyword == "atoms":
                if universe is not None:
                    raise DuplicateDeclaration("atoms")
                spec.atoms = _names(stripped.split()[1:], line_no)
                universe = AtomUniverse(names=tuple(spec.atoms))
                continue
            if keyword == "labels":
                if seen_labels:
                    raise DuplicateDeclaration("labels")
                spec.labels = _names(stripped.split()[1:], line_no)
                seen_labels = True
                continue
            if universe is None:
                raise MalformedSyntax(f"'{keyword}' before the atoms declaration")

            if keyword == "act":
                m = _ACT.match(stripped)
                if not m:
                    raise MalformedSyntax("expected 'act <label> <atom> = {...}'")
                label, atom = m.group(1), m.group(2)
                if label not in spec.labels:
                    raise UnknownLabel(label)
                universe.index(atom)
                key = f"act {label} {atom}"
                if key in spec.lines:
                    raise DuplicateDeclaration(key)
                spec.images.setdefault(label, {})[atom] = element(body, m, 3, line_no)
                spec.lines[key] = line_no
            elif keyword == "ideal":
                m = _IDEAL.match(stripped)
                if not m:
                    raise MalformedSyntax("expected 'ideal <label> = {...}'")
                label = m.group(1)
                if label not in spec.labels:
                    raise UnknownLabel(label)
                key = f"ideal {label}"
                if key in spec.lines:
                    raise DuplicateDeclaration(key)
                spec.ideal_tops[label] = element(body, m, 2, line_no)
                spec.lines[key] = line_no
            elif keyword == "J" or stripped.startswith("J="):
                m = _J.match(stripped)
                if not m:
                    raise MalformedSyntax("expected 'J = {...}'")
                if "J" in spec.lines:
                    raise DuplicateDeclaration("J")
                spec.j_top = element(body, m, 1, line_no)
                spec.lines["J"] = line_no
            else:
                raise MalformedSyntax(f"unknown keyword {keyword!r}")
        except BDSAError as e:
            if e.line is None:
                e.with_line(line_no)
            raise
    return spec


def parse_instance(text: str) -> Instance:
    return build_instance(parse_instance_text(text))


def load_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    logger.debug("loading instance from %s", path)
    return parse_instance(text)


def render_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    """Canonical text; parsing it back yields an equal Instance."""
    u = inst.universe
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(" ".join(["atoms", *u.names]))
    lines.append(" ".join(["labels", *inst.labels]))
    for alpha, label in enumerate(inst.labels):
        for a, image in enumerate(inst.actions[alpha].images):
            if image:
                lines.append(f"act {label} {u.names[a]} = {render_element(u, image)}")
    for alpha, label in enumerate(inst.labels):
        lines.append(f"ideal {label} = {render_element(u, inst.ideal_tops[alpha])}")
    lines.append(f"J = {render_element(u, inst.j_top)}")
    return "\n".join(lines) + "\n"

