"""Text grammar for formulas.

    f ::= atom | false | !f | f -> f | f <-> f | B{T}{X} f | K{X} f | [X] f | (f)

`->` is right-associative and binds looser than every prefix operator; `<->` is looser
still and does not chain. `K`, `<->` and `false` are expanded here, so parse output only
contains the five primitive constructors.
"""

import logging

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from src.errors import FormulaSyntaxError
from src.logic.formulas import (
    RESERVED_ATOM,
    Announce,
    Atom,
    Belief,
    Dataset,
    Formula,
    Implies,
    Not,
    falsum,
    iff,
    knows,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: iff

?iff: imp
    | imp "<->" imp                           -> equivalence

?imp: prefix
    | prefix "->" imp                         -> implication

?prefix: "!" prefix                           -> negation
       | BELIEF_OPEN varlist "}" "{" varlist "}" prefix  -> belief
       | KNOW_OPEN varlist "}" prefix         -> knowledge
       | "[" varlist "]" prefix               -> announcement
       | primary

?primary: IDENT                               -> atom
        | "false"                             -> falsum
        | "(" iff ")"

varlist: (IDENT ("," IDENT)*)?

BELIEF_OPEN.2: /B\s*\{/
KNOW_OPEN.2: /K\s*\{/
IDENT: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

_parser: Lark | None = None


def get_parser() -> Lark:
    """Get or build the LALR parser singleton."""
    global _parser
    if _parser is None:
        _parser = Lark(GRAMMAR, parser="lalr", maybe_placeholders=False)
    return _parser


class _FormulaBuilder:
    """Turns a parse tree into a Formula, one rule method per tree node, without recursion."""

    def __init__(self, text: str):
        self._text = text

    def build(self, tree: Tree) -> Formula:
        # post-order: each rule method receives the values of its children in order
        values: list = []
        stack: list[tuple[Tree | Token, bool]] = [(tree, False)]
        while stack:
            node, expanded = stack.pop()
            if isinstance(node, Token):
                values.append(node)
            elif not expanded:
                stack.append((node, True))
                stack.extend((child, False) for child in reversed(node.children))
            else:
                start = len(values) - len(node.children)
                args = values[start:]
                del values[start:]
                values.append(getattr(self, node.data)(*args))
        return values[0]

    def varlist(self, *names: Token) -> Dataset:
        for name in names:
            if name.startswith("_"):
                raise _error(f"data variable '{name}' may not start with an underscore", self._text, name)
        return Dataset(tuple(str(n) for n in names))

    def atom(self, name: Token) -> Formula:
        if name == RESERVED_ATOM:
            raise _error(f"'{RESERVED_ATOM}' is reserved for the encoding of false", self._text, name)
        return Atom(str(name))

    def falsum(self) -> Formula:
        return falsum()

    def negation(self, body: Formula) -> Formula:
        return Not(body)

    def implication(self, lhs: Formula, rhs: Formula) -> Formula:
        return Implies(lhs, rhs)

    def equivalence(self, lhs: Formula, rhs: Formula) -> Formula:
        return iff(lhs, rhs)

    def belief(self, _open: Token, trust: Dataset, data: Dataset, body: Formula) -> Formula:
        return Belief(trust, data, body)

    def knowledge(self, _open: Token, data: Dataset, body: Formula) -> Formula:
        return knows(data, body)

    def announcement(self, data: Dataset, body: Formula) -> Formula:
        return Announce(data, body)


def _error(message: str, text: str, token: Token) -> FormulaSyntaxError:
    return FormulaSyntaxError(
        message,
        text=text,
        position=token.start_pos or 0,
        line=token.line or 1,
        column=token.column or 1,
    )


def _describe(e: UnexpectedInput, text: str) -> str:
    if isinstance(e, UnexpectedCharacters):
        return f"unexpected character {text[e.pos_in_stream]!r}"
    if isinstance(e, UnexpectedToken):
        if e.token.type == "$END":
            return "unexpected end of formula"
        return f"unexpected {e.token.value!r}"
    return "malformed formula"


def parse(text: str) -> Formula:
    """Parse formula text. Raises FormulaSyntaxError with the position of the problem."""
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as e:
        position = e.pos_in_stream if isinstance(e.pos_in_stream, int) and e.pos_in_stream >= 0 else len(text)
        line = e.line if isinstance(e.line, int) and e.line > 0 else 1
        column = e.column if isinstance(e.column, int) and e.column > 0 else position + 1
        raise FormulaSyntaxError(_describe(e, text), text=text, position=position, line=line, column=column) from None

    formula = _FormulaBuilder(text).build(tree)
    logger.debug(f"Parsed {text!r}")
    return formula


def parse_dataset(text: str) -> Dataset:
    """Parse a comma list such as `x,y` (or an empty string) into a Dataset."""
    names = [n.strip() for n in text.split(",") if n.strip()]
    try:
        return Dataset(tuple(names))
    except ValueError as e:
        raise FormulaSyntaxError(str(e), text=text) from None
