# -*- coding: utf-8 -*-
import json
import logging

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import yaml

from marshmallow import Schema, ValidationError, fields, validate

from ..exceptions import (
    GhostVertex,
    MalformedInput,
    VertexOutOfRange,
    WidthMismatch,
)
from ..simplicial_core import SimplicialComplex
from ..two_torus import Subtorus
from ..vertex_set import MAX_VERTICES

logger = logging.getLogger(__name__)


class ProblemSchema(Schema):
    m = fields.Int(
        required=True, strict=True, validate=validate.Range(min=1, max=MAX_VERTICES)
    )
    facets = fields.List(fields.List(fields.Int(strict=True)), required=True)
    group_generators = fields.List(
        fields.Str(validate=validate.Regexp(r"^[01]+$")), required=True
    )


def _flatten_messages(messages: Any, prefix: str = "") -> Dict[str, List[str]]:
    if isinstance(messages, dict):
        flat: Dict[str, List[str]] = {}
        for key, value in messages.items():
            path = "%s.%s" % (prefix, key) if prefix else str(key)
            flat.update(_flatten_messages(value, path))
        return flat
    if isinstance(messages, str):
        return {prefix: [messages]}
    return {prefix: [str(message) for message in messages]}


def validation_error_exception_message(e: ValidationError) -> str:
    validation_messages = _flatten_messages(e.normalized_messages())
    messages_list = []
    message_format = 'on field "%s" with message%s %s'
    messages_count = 0
    for field in sorted(validation_messages.keys()):
        messages = validation_messages[field]
        messages_count += len(messages)
        messages_str = ", ".join('"' + msg + '"' for msg in messages)
        message = message_format % (
            field,
            "" if len(messages) <= 1 else "s",
            messages_str,
        )
        messages_list.append(message)
    message = "Validation error%s: %s" % (
        "" if messages_count <= 1 else "s",
        "; ".join(messages_list),
    )
    return message


def _key_lines(text: str) -> Dict[str, int]:
    """
    1-based line of every top-level key, for error locations
    """
    try:
        node = yaml.compose(text)
    except yaml.YAMLError:
        return {}
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {
        str(key.value): key.start_mark.line + 1
        for key, _ in node.value
        if isinstance(key, yaml.ScalarNode)
    }


def _location(
    field: Optional[str], lines: Dict[str, int], source: Optional[str]
) -> Optional[str]:
    parts = []
    if source:
        parts.append(source)
    if field is not None:
        top = field.split(".", 1)[0]
        if top in lines:
            parts.append("line %d" % lines[top])
        parts.append('field "%s"' % field)
    return ", ".join(parts) or None


@dataclass(frozen=True)
class ProblemFile:
    """
    One analysis problem: a complex on ``[m]`` given by facets and the
    generators of a subgroup of ``(Z/2)^m`` as 0/1 strings, leftmost
    character for vertex 1.
    """

    m: int
    facets: Tuple[Tuple[int, ...], ...]
    group_generators: Tuple[str, ...]

    def to_complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.m, self.facets)

    def to_group(self) -> Subtorus:
        return Subtorus.from_strings(self.group_generators, m=self.m)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "facets": [list(facet) for facet in self.facets],
            "group_generators": list(self.group_generators),
        }

    @classmethod
    def from_objects(
        cls, complex_: SimplicialComplex, group: Subtorus
    ) -> "ProblemFile":
        """
        Canonical problem: sorted facets, reduced-echelon generators
        """
        return cls(
            m=complex_.m,
            facets=tuple(facet.vertices for facet in complex_.sorted_facets()),
            group_generators=tuple(g.to_string() for g in group.basis),
        )


def _check_ranges(
    m: int,
    facets: Sequence[Sequence[int]],
    generators: Sequence[str],
    lines: Dict[str, int],
    source: Optional[str] = None,
):
    for i, facet in enumerate(facets):
        for k, vertex in enumerate(facet):
            if not 1 <= vertex <= m:
                location = _location("facets.%d.%d" % (i, k), lines, source)
                raise VertexOutOfRange(vertex, m, location)
    for i, generator in enumerate(generators):
        if len(generator) != m:
            location = _location("group_generators.%d" % i, lines, source)
            raise WidthMismatch(m, len(generator), location)


def parse_problem(text: str, source: Optional[str] = None) -> ProblemFile:
    """
    Read a problem from YAML or JSON text and validate it.

    Parameters
    ----------
    text: str
        Object with the keys ``m``, ``facets`` and ``group_generators``.
    source: Optional[str]
        File name, used only in error messages.

    Returns
    -------
    ProblemFile

    Examples
    --------
    >>> problem = parse_problem(
    ...     '{"m": 3, "facets": [[1, 2], [2, 3], [1, 3]], "group_generators": ["111"]}'
    ... )
    >>> problem.to_complex().delta_number(), problem.to_group().rank
    (Finite(2), 1)
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        location = None
        if mark is not None:
            location = "line %d, column %d" % (mark.line + 1, mark.column + 1)
            if source:
                location = "%s, %s" % (source, location)
        raise MalformedInput("Unable to parse problem text: %s" % e, location)
    if not isinstance(raw, dict):
        raise MalformedInput(
            "Problem must be a mapping, found %s" % type(raw).__name__, source
        )

    lines = _key_lines(text)
    try:
        valid = ProblemSchema().load(raw)
    except ValidationError as e:
        flat = _flatten_messages(e.normalized_messages())
        first_field = sorted(flat)[0] if flat else None
        raise MalformedInput(
            validation_error_exception_message(e),
            _location(first_field, lines, source),
        )

    m = valid["m"]
    facets = valid["facets"]
    generators = valid["group_generators"]
    _check_ranges(m, facets, generators, lines, source)

    problem = ProblemFile(
        m=m,
        facets=tuple(tuple(facet) for facet in facets),
        group_generators=tuple(generators),
    )
    try:
        problem.to_complex()
    except GhostVertex as e:
        raise GhostVertex(e.vertex, _location("facets", lines, source)) from e
    logger.debug(
        f"Parsed problem on {m} vertices with {len(facets)} facets "
        f"and {len(generators)} generators"
    )
    return problem


def canonical_problem(problem: ProblemFile) -> ProblemFile:
    """
    Facets reduced to the sorted antichain of the complex they span;
    generators kept as written.
    """
    complex_ = problem.to_complex()
    return ProblemFile(
        m=problem.m,
        facets=tuple(facet.vertices for facet in complex_.sorted_facets()),
        group_generators=problem.group_generators,
    )


def dump_problem(problem: ProblemFile) -> str:
    """
    Canonical text of a problem; parsing it gives the same canonical problem.

    Examples
    --------
    >>> problem = ProblemFile(3, ((2, 3), (1, 2, 3)), ("110",))
    >>> dump_problem(problem)
    '{"m": 3, "facets": [[1, 2, 3]], "group_generators": ["110"]}'
    """
    return json.dumps(canonical_problem(problem).to_dict())

