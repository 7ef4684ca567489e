"""Span-preserving syntactic view over Java sources.

The parser is deliberately shallow: it recognizes declarations, statements,
calls and instantiations by their syntactic shape and never resolves types.
Every record carries byte spans into the original file so that mutation
edits can be spliced back without reformatting.

Source bytes are decoded as latin-1, which maps each byte to exactly one
code point; string offsets are therefore byte offsets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from ..errors import ParseFailure
from .spans import Span

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized this
    throw throws transient try void volatile while true false null""".split()
)

PRIMITIVES = frozenset("boolean byte char short int long float double void".split())

MODIFIERS = frozenset(
    "public protected private static final abstract native synchronized "
    "transient volatile strictfp default sealed".split()
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\f\r\n]+)
  | (?P<line_comment>//[^\r\n]*)
  | (?P<block_comment>/\*.*?\*/)
  | (?P<text_block>\"\"\"[ \t\f]*\r?\n(?:[^"\\]|\\.|"(?!""))*\"\"\")
  | (?P<string>"(?:[^"\\\r\n]|\\.)*")
  | (?P<char>'(?:[^'\\\r\n]|\\.)+')
  | (?P<number>0[xX][0-9a-fA-F_]+[lL]?|0[bB][01_]+[lL]?
       |(?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?)
  | (?P<ident>[A-Za-z_$\x80-\xff][A-Za-z0-9_$\x80-\xff]*)
  | (?P<op>>>>=|<<=|>>=|>>>|\.\.\.|->|::|\+\+|--|&&|\|\||==|!=|<=|>=|\+=|-=|\*=|/=
       |&=|\|=|\^=|%=|<<|>>|[{}()\[\];,.@=<>!~?:+\-*/&|^%])
    """,
    re.VERBOSE | re.DOTALL,
)

_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {v: k for k, v in _OPEN.items()}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int


def tokenize(text: str, path: str = "<memory>"):
    """Split Java source into tokens and comment spans.

    Returns ``(tokens, comments)`` where comments is a list of ``(start, end)``.
    """
    tokens = []
    comments = []
    pos = 0
    n = len(text)
    match = _TOKEN_RE.match
    while pos < n:
        m = match(text, pos)
        if m is None:
            if text.startswith("/*", pos):
                raise ParseFailure(path, "unterminated block comment", pos)
            if text[pos] in "\"'":
                raise ParseFailure(path, "unterminated literal", pos)
            raise ParseFailure(path, f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        end = m.end()
        if kind == "ws":
            pass
        elif kind in ("line_comment", "block_comment"):
            comments.append((pos, end))
        else:
            tok_text = m.group()
            if kind == "ident" and tok_text in KEYWORDS:
                kind = "keyword"
            elif kind == "text_block":
                kind = "string"
            tokens.append(Token(kind, tok_text, pos, end))
        pos = end
    return tokens, comments


def match_brackets(tokens, path="<memory>"):
    """Map the index of every bracket token to the index of its partner."""
    pairs = {}
    stack = []
    for i, tok in enumerate(tokens):
        if tok.kind != "op":
            continue
        if tok.text in _OPEN:
            stack.append(i)
        elif tok.text in _CLOSE:
            if not stack or tokens[stack[-1]].text != _CLOSE[tok.text]:
                raise ParseFailure(path, f"unbalanced {tok.text!r}", tok.start)
            j = stack.pop()
            pairs[i] = j
            pairs[j] = i
    if stack:
        raise ParseFailure(path, f"unclosed {tokens[stack[-1]].text!r}", tokens[stack[-1]].start)
    return pairs


# ---------------------------------------------------------------------------
# View records


@dataclass(frozen=True)
class Invocation:
    receiver_text: Optional[str]
    method_name: str
    name_span: Span
    argument_spans: tuple
    call_span: Span
    enclosing_method: Optional[str]
    enclosing_class: Optional[str]
    top_class: Optional[str]
    statement: Optional[int]
    receiver_span: Optional[Span] = None


@dataclass(frozen=True)
class Instantiation:
    class_name: str
    argument_spans: tuple
    span: Span
    enclosing_method: Optional[str]
    enclosing_class: Optional[str]
    top_class: Optional[str]
    statement: Optional[int]
    chained: bool = False
    has_body: bool = False


@dataclass(frozen=True)
class ClassDecl:
    name: str
    kind: str
    implements_names: tuple
    implements_spans: tuple
    implements_clause_span: Optional[Span]
    override_annotation_spans: tuple
    span: Span
    body_span: Span
    enclosing_class: Optional[str]
    top_class: str


@dataclass(frozen=True)
class VarDecl:
    name: str
    declared_type_name: str
    is_final: bool
    init_span: Optional[Span]
    statement_span: Optional[Span]
    name_span: Span
    kind: str  # local | field | param | foreach | catch | resource | for
    enclosing_method: Optional[str]
    enclosing_class: Optional[str]
    top_class: Optional[str]
    statement: Optional[int] = None


@dataclass(frozen=True)
class Assignment:
    lhs_name: str
    lhs_span: Span
    rhs_span: Span
    statement_span: Span
    enclosing_method: Optional[str]
    enclosing_class: Optional[str]
    top_class: Optional[str]
    statement: Optional[int] = None


@dataclass(frozen=True)
class StringLiteral:
    value: str
    span: Span
    enclosing_method: Optional[str]
    enclosing_class: Optional[str]
    top_class: Optional[str]


@dataclass(frozen=True)
class MethodDecl:
    name: str
    parameter_types: tuple
    parameter_names: tuple
    parameter_final: tuple
    return_type: Optional[str]
    body_span: Optional[Span]
    enclosing_class: str
    top_class: str
    is_override: bool
    override_span: Optional[Span]
    span: Span

    @property
    def descriptor(self):
        return f"{self.enclosing_class}.{self.name}({','.join(self.parameter_types)})"


@dataclass(frozen=True)
class Statement:
    span: Span
    kind: str  # local | expr | return | throw | other
    block_level: bool
    enclosing_method: Optional[str]


@dataclass(frozen=True)
class SyntaxView:
    path: str
    invocations: tuple
    instantiations: tuple
    class_decls: tuple
    var_decls: tuple
    assignments: tuple
    string_literals: tuple
    method_decls: tuple
    statements: tuple
    comment_spans: tuple
    r_id_refs: tuple  # (name, Span) for every ``R.id.<name>`` token run

    def declared_var(self, name, offset, enclosing_method=None, enclosing_class=None):
        """Best-effort lookup of the declaration a simple name refers to.

        Locals and parameters of the same method win (nearest preceding
        declaration), then fields of the enclosing class, then any field of
        that name in the file.
        """
        best = None
        if enclosing_method is not None:
            for decl in self.var_decls:
                if (
                    decl.name == name
                    and decl.kind != "field"
                    and decl.enclosing_method == enclosing_method
                    and decl.name_span.start <= offset
                ):
                    if best is None or decl.name_span.start > best.name_span.start:
                        best = decl
        if best is not None:
            return best
        fields = [d for d in self.var_decls if d.kind == "field" and d.name == name]
        for decl in fields:
            if decl.enclosing_class == enclosing_class:
                return decl
        if enclosing_class:
            # walk outwards through nesting: "A.B" then "A"
            outer = enclosing_class
            while "." in outer or "$" in outer:
                outer = re.split(r"[.$](?=[^.$]*$)", outer)[0]
                for decl in fields:
                    if decl.enclosing_class == outer:
                        return decl
        return fields[0] if fields else None


# ---------------------------------------------------------------------------
# Parser


@dataclass
class _Ctx:
    method: Optional[str]
    cls: Optional[str]
    top: Optional[str]


@dataclass
class _ClassState:
    name: str
    top: str
    anon_counter: list = field(default_factory=lambda: [0])


class _Parser:
    def __init__(self, text: str, path: str):
        self.text = text
        self.path = path
        self.toks, self.comments = tokenize(text, path)
        self.match = match_brackets(self.toks, path)
        self.n = len(self.toks)
        self.invocations = []
        self.instantiations = []
        self.class_decls = []
        self.var_decls = []
        self.assignments = []
        self.strings = []
        self.methods = []
        self.statements = []
        self.current_stmt = None
        self.anon_counters = {}

    # -- helpers -----------------------------------------------------------

    def fail(self, i, message):
        pos = self.toks[i].start if i < self.n else len(self.text)
        raise ParseFailure(self.path, message, pos)

    def tx(self, i):
        return self.toks[i].text if i < self.n else ""

    def is_op(self, i, text):
        return i < self.n and self.toks[i].kind == "op" and self.toks[i].text == text

    def span(self, i, j):
        """Span from the start of token i to the end of token j (inclusive)."""
        return Span(self.path, self.toks[i].start, self.toks[j].end)

    def skip_angle(self, i):
        """Skip a generic argument list starting at '<'; return index after it or None."""
        depth = 0
        j = i
        while j < self.n:
            tok = self.toks[j]
            if tok.kind == "op":
                if tok.text == "<":
                    depth += 1
                elif tok.text in (">", ">>", ">>>"):
                    depth -= len(tok.text)
                    if depth <= 0:
                        return j + 1 if depth == 0 else None
                elif tok.text in ("[", "]", ",", ".", "?", "&", "@", "..."):
                    pass
                else:
                    return None
            elif tok.kind == "keyword" and tok.text not in ("extends", "super") and tok.text not in PRIMITIVES:
                return None
            elif tok.kind not in ("ident", "keyword"):
                return None
            j += 1
        return None

    def skip_annotation(self, i):
        """i at '@' (not '@interface'); return index after the annotation."""
        j = i + 1
        while j < self.n and self.toks[j].kind == "ident":
            j += 1
            if self.is_op(j, ".") and j + 1 < self.n and self.toks[j + 1].kind == "ident":
                j += 1
            else:
                break
        if self.is_op(j, "("):
            j = self.match[j] + 1
        return j

    def skip_modifiers(self, i):
        """Skip annotations and modifiers; return (index, modifiers, annotations)."""
        mods = set()
        annots = []
        while i < self.n:
            tok = self.toks[i]
            if tok.kind == "op" and tok.text == "@" and self.tx(i + 1) != "interface":
                j = self.skip_annotation(i)
                annots.append((self.tx(i + 1), self.span(i, i + 1)))
                i = j
            elif tok.text in MODIFIERS and tok.kind in ("keyword", "ident"):
                # ``default`` inside switch bodies is handled by the caller
                if tok.text == "sealed" and self.tx(i + 1) in ("class", "interface"):
                    mods.add(tok.text)
                    i += 1
                elif tok.text in ("sealed",):
                    break
                else:
                    mods.add(tok.text)
                    i += 1
            elif tok.text == "non" and self.is_op(i + 1, "-") and self.tx(i + 2) == "sealed":
                i += 3
            else:
                break
        return i, mods, annots

    def parse_type(self, i):
        """Parse a type starting at i; return (end_index, type_text) or None."""
        j = i
        if j >= self.n:
            return None
        tok = self.toks[j]
        if tok.kind == "keyword" and tok.text in PRIMITIVES:
            j += 1
        elif tok.kind == "ident":
            j += 1
            while True:
                if self.is_op(j, "<"):
                    k = self.skip_angle(j)
                    if k is None:
                        return None
                    j = k
                if self.is_op(j, ".") and j + 1 < self.n and self.toks[j + 1].kind == "ident":
                    j += 2
                    continue
                break
        else:
            return None
        while self.is_op(j, "[") and self.is_op(j + 1, "]"):
            j += 2
        if self.is_op(j, "..."):
            j += 1
        type_text = "".join(t.text for t in self.toks[i:j])
        return j, type_text

    def skip_new_type(self, i):
        """i just after 'new'; skip annotations and the (generic) type name."""
        j = i
        while self.is_op(j, "@"):
            j = self.skip_annotation(j)
        names = []
        while j < self.n and self.toks[j].kind in ("ident", "keyword"):
            names.append(self.toks[j].text)
            j += 1
            if self.is_op(j, "<"):
                k = self.skip_angle(j)
                if k is None:
                    break
                j = k
            if self.is_op(j, ".") and j + 1 < self.n and self.toks[j + 1].kind == "ident":
                j += 1
                continue
            break
        return j, ".".join(names)

    def expr_end(self, i, hi, stops):
        """Index of the first token in [i, hi) whose text is in stops at nesting depth 0."""
        j = i
        while j < hi:
            tok = self.toks[j]
            if tok.kind == "op":
                if tok.text in stops:
                    return j
                if tok.text in _OPEN:
                    j = self.match[j] + 1
                    continue
                if tok.text == "." and self.is_op(j + 1, "<"):
                    k = self.skip_angle(j + 1)
                    if k is not None:
                        j = k
                        continue
            elif tok.kind == "keyword" and tok.text == "new":
                k, _ = self.skip_new_type(j + 1)
                j = max(k, j + 1)
                continue
            j += 1
        return hi

    def split_commas(self, lo, hi):
        """Split tokens in [lo, hi) at top-level commas; return list of (lo, hi)."""
        parts = []
        j = lo
        while j < hi:
            k = self.expr_end(j, hi, (",",))
            parts.append((j, k))
            j = k + 1
        return [p for p in parts if p[0] < p[1]]

    def range_span(self, lo, hi):
        return Span(self.path, self.toks[lo].start, self.toks[hi - 1].end)

    # -- declarations ------------------------------------------------------

    def parse(self):
        i = 0
        while i < self.n:
            tok = self.toks[i]
            if tok.text in ("package", "import") and tok.kind == "keyword":
                i = self.expr_end(i, self.n, (";",)) + 1
                continue
            if self.is_op(i, ";"):
                i += 1
                continue
            start = i
            i, _, _ = self.skip_modifiers(i)
            if self.is_type_keyword(i):
                i = self.type_decl(start, i, None)
            else:
                self.fail(i, "expected a type declaration")
        return SyntaxView(
            path=self.path,
            invocations=tuple(self.invocations),
            instantiations=tuple(self.instantiations),
            class_decls=tuple(sorted(self.class_decls, key=lambda c: (c.span.start, c.span.end))),
            var_decls=tuple(self.var_decls),
            assignments=tuple(self.assignments),
            string_literals=tuple(self.strings),
            method_decls=tuple(self.methods),
            statements=tuple(self.statements),
            comment_spans=tuple(Span(self.path, s, e) for s, e in self.comments),
            r_id_refs=tuple(self.find_r_id_refs()),
        )

    def find_r_id_refs(self):
        refs = []
        toks = self.toks
        for i in range(self.n - 4):
            if (
                toks[i].text == "R"
                and toks[i].kind == "ident"
                and toks[i + 1].text == "."
                and toks[i + 2].text == "id"
                and toks[i + 3].text == "."
                and toks[i + 4].kind == "ident"
                and not (i > 0 and toks[i - 1].text == ".")
            ):
                refs.append((toks[i + 4].text, self.span(i, i + 4)))
        return refs

    def is_type_keyword(self, i):
        t = self.tx(i)
        if t in ("class", "interface", "enum"):
            return True
        if t == "@" and self.tx(i + 1) == "interface":
            return True
        if t == "record" and i + 2 < self.n and self.toks[i + 1].kind == "ident" and self.is_op(i + 2, "("):
            return True
        return False

    def type_decl(self, start, i, outer: Optional[_ClassState], local_ctx: Optional[_Ctx] = None):
        kind = self.tx(i)
        if kind == "@":
            kind = "annotation"
            i += 1
        name_idx = i + 1
        if name_idx >= self.n or self.toks[name_idx].kind != "ident":
            self.fail(i, "expected type name")
        simple = self.toks[name_idx].text
        if outer is None:
            qual, top = simple, simple
        else:
            qual, top = f"{outer.name}.{simple}", outer.top
        j = name_idx + 1
        impl_idx = None
        while j < self.n and not self.is_op(j, "{"):
            if self.is_op(j, "("):
                j = self.match[j]
            elif self.tx(j) == "implements" and kind != "interface":
                impl_idx = j
            elif self.is_op(j, ";"):
                self.fail(j, "unexpected ';' in type header")
            j += 1
        if j >= self.n:
            self.fail(i, "missing type body")
        body_open = j
        body_close = self.match[j]
        impl_names, impl_spans, clause = (), (), None
        if impl_idx is not None:
            stop = impl_idx + 1
            while stop < body_open and self.tx(stop) != "permits":
                stop += 1
            names, spans = [], []
            for lo, hi in self.split_commas_angle(impl_idx + 1, stop):
                idents = [t.text for t in self.toks[lo:hi] if t.kind == "ident"]
                # drop generic arguments: the interface name precedes the first '<'
                head = lo
                while head < hi and not self.is_op(head, "<"):
                    head += 1
                head_idents = [t.text for t in self.toks[lo:head] if t.kind == "ident"]
                names.append(head_idents[-1] if head_idents else (idents[-1] if idents else ""))
                spans.append(self.range_span(lo, hi))
            impl_names, impl_spans = tuple(names), tuple(spans)
            clause = Span(self.path, self.toks[impl_idx].start, self.toks[stop - 1].end)
        state = _ClassState(qual, top)
        before = len(self.methods)
        if kind == "enum":
            self.parse_enum_body(body_open, body_close, state)
        else:
            self.parse_class_body(body_open + 1, body_close, state)
        overrides = tuple(
            m.override_span
            for m in self.methods[before:]
            if m.enclosing_class == qual and m.override_span is not None
        )
        self.class_decls.append(
            ClassDecl(
                name=qual,
                kind=kind,
                implements_names=impl_names,
                implements_spans=impl_spans,
                implements_clause_span=clause,
                override_annotation_spans=overrides,
                span=self.span(start, body_close),
                body_span=self.span(body_open, body_close),
                enclosing_class=outer.name if outer else None,
                top_class=top,
            )
        )
        return body_close + 1

    def split_commas_angle(self, lo, hi):
        """Comma split that also respects generic angle brackets (type lists)."""
        parts = []
        depth = 0
        start = lo
        for j in range(lo, hi):
            t = self.toks[j]
            if t.kind == "op":
                if t.text == "<":
                    depth += 1
                elif t.text in (">", ">>", ">>>"):
                    depth -= len(t.text)
                elif t.text == "," and depth == 0:
                    if start < j:
                        parts.append((start, j))
                    start = j + 1
        if start < hi:
            parts.append((start, hi))
        return parts

    def parse_enum_body(self, lb, rb, state):
        i = lb + 1
        ctx = _Ctx(None, state.name, state.top)
        # constants run until the first top-level ';' or the closing brace
        while i < rb:
            if self.is_op(i, ";"):
                i += 1
                break
            if self.is_op(i, ","):
                i += 1
                continue
            i, _, _ = self.skip_modifiers(i)
            if i >= rb:
                break
            if self.toks[i].kind != "ident":
                self.fail(i, "expected enum constant")
            i += 1
            if self.is_op(i, "("):
                self.scan_expr(i + 1, self.match[i], ctx)
                i = self.match[i] + 1
            if self.is_op(i, "{"):
                anon = self.anon_state(state)
                self.parse_class_body(i + 1, self.match[i], anon)
                i = self.match[i] + 1
        self.parse_class_body(i, rb, state)

    def anon_state(self, state):
        counter = self.anon_counters.setdefault(state.top, [0])
        counter[0] += 1
        return _ClassState(f"{state.top}${counter[0]}", state.top)

    def parse_class_body(self, lo, hi, state: _ClassState):
        i = lo
        while i < hi:
            if self.is_op(i, ";"):
                i += 1
                continue
            start = i
            i, mods, annots = self.skip_modifiers(i)
            if i >= hi:
                break
            if self.is_type_keyword(i):
                i = self.type_decl(start, i, state)
                continue
            if self.is_op(i, "{"):
                ctx = _Ctx(f"{state.name}.<init>()", state.name, state.top)
                self.parse_block(i, ctx)
                i = self.match[i] + 1
                continue
            i = self.parse_member(start, i, hi, mods, annots, state)

    def parse_member(self, start, i, hi, mods, annots, state):
        j = i
        if self.is_op(j, "<"):
            k = self.skip_angle(j)
            if k is None:
                self.fail(j, "bad type parameters")
            j = k
        type_start = j
        k = j
        while k < hi and not (self.toks[k].kind == "op" and self.toks[k].text in ("(", "=", ";", "{", ",")):
            if self.is_op(k, "<"):
                skipped = self.skip_angle(k)
                if skipped is None:
                    self.fail(k, "bad generic type")
                k = skipped
                continue
            if self.is_op(k, "["):
                k = self.match[k] + 1
                continue
            k += 1
        if k >= hi:
            self.fail(start, "unterminated member declaration")
        if self.is_op(k, "("):
            return self.method_decl(start, type_start, k, hi, annots, state)
        if self.is_op(k, "{"):
            # compact record constructor
            ctx = _Ctx(f"{state.name}.<init>()", state.name, state.top)
            self.parse_block(k, ctx)
            return self.match[k] + 1
        parsed = self.parse_type(type_start)
        if parsed is None:
            self.fail(type_start, "expected field type")
        after_type, type_text = parsed
        ctx = _Ctx(None, state.name, state.top)
        end = self.expr_end(after_type, hi, (";",))
        self.declarators(after_type, end, type_text, "final" in mods, "field", ctx, self.span(start, min(end, hi - 1)))
        return end + 1

    def declarators(self, lo, hi, type_text, is_final, kind, ctx, stmt_span, stmt_index=None):
        for dlo, dhi in self.split_commas(lo, hi):
            if self.toks[dlo].kind != "ident":
                self.fail(dlo, "expected variable name")
            name_tok = self.toks[dlo]
            eq = dlo + 1
            extra = ""
            while self.is_op(eq, "[") and self.is_op(eq + 1, "]"):
                extra += "[]"
                eq += 2
            init = None
            if eq < dhi and self.is_op(eq, "="):
                if eq + 1 >= dhi:
                    self.fail(eq, "missing initializer")
                init = self.range_span(eq + 1, dhi)
                self.scan_expr(eq + 1, dhi, ctx)
            self.var_decls.append(
                VarDecl(
                    name=name_tok.text,
                    declared_type_name=type_text + extra,
                    is_final=is_final,
                    init_span=init,
                    statement_span=stmt_span,
                    name_span=Span(self.path, name_tok.start, name_tok.end),
                    kind=kind,
                    enclosing_method=ctx.method,
                    enclosing_class=ctx.cls,
                    top_class=ctx.top,
                    statement=stmt_index,
                )
            )

    def method_decl(self, start, type_start, lp, hi, annots, state):
        name_idx = lp - 1
        name_tok = self.toks[name_idx]
        if name_tok.kind != "ident":
            self.fail(name_idx, "expected method name")
        return_type = None
        if name_idx > type_start:
            return_type = "".join(t.text for t in self.toks[type_start:name_idx])
        rp = self.match[lp]
        types, names, finals = self.parse_params(lp, rp)
        k = rp + 1
        while self.is_op(k, "[") and self.is_op(k + 1, "]"):
            k += 2
        if self.tx(k) == "throws":
            while k < hi and not (self.is_op(k, "{") or self.is_op(k, ";")):
                k += 1
        if self.tx(k) == "default":
            k = self.expr_end(k, hi, (";",))
        override_span = None
        for aname, aspan in annots:
            if aname == "Override":
                override_span = aspan
        descriptor = f"{state.name}.{name_tok.text}({','.join(types)})"
        ctx = _Ctx(descriptor, state.name, state.top)
        for t, nm, fin, pspan in zip(types, names, finals, self._param_spans):
            self.var_decls.append(
                VarDecl(nm, t, fin, None, None, pspan, "param", descriptor, state.name, state.top)
            )
        body = None
        end = k
        if self.is_op(k, "{"):
            end = self.match[k]
            body = self.span(k, end)
        elif not self.is_op(k, ";"):
            self.fail(k, "expected method body")
        self.methods.append(
            MethodDecl(
                name=name_tok.text,
                parameter_types=types,
                parameter_names=names,
                parameter_final=finals,
                return_type=return_type,
                body_span=body,
                enclosing_class=state.name,
                top_class=state.top,
                is_override=override_span is not None,
                override_span=override_span,
                span=self.span(start, end),
            )
        )
        if body is not None:
            self.parse_block(k, ctx)
        return end + 1

    def parse_params(self, lp, rp):
        types, names, finals, spans = [], [], [], []
        for lo, hi in self.split_commas_angle(lp + 1, rp):
            j, mods, _ = self.skip_modifiers(lo)
            parsed = self.parse_type(j)
            if parsed is None:
                self.fail(j, "bad parameter type")
            j, type_text = parsed
            if self.tx(j) == "this":  # receiver parameter
                continue
            if j >= hi or self.toks[j].kind != "ident":
                self.fail(j, "expected parameter name")
            extra = ""
            k = j + 1
            while self.is_op(k, "[") and self.is_op(k + 1, "]"):
                extra += "[]"
                k += 2
            types.append(type_text + extra)
            names.append(self.toks[j].text)
            finals.append("final" in mods)
            spans.append(self.span(j, j))
        self._param_spans = spans
        return tuple(types), tuple(names), tuple(finals)

    # -- statements --------------------------------------------------------

    def parse_block(self, lb, ctx, block_level=True):
        rb = self.match[lb]
        i = lb + 1
        while i < rb:
            i = self.parse_statement(i, rb, ctx, block_level)

    def add_statement(self, lo, hi_incl, kind, block_level, ctx):
        self.statements.append(Statement(self.span(lo, hi_incl), kind, block_level, ctx.method))
        return len(self.statements) - 1

    def paren_expr(self, i, ctx):
        """i at '('; scan the parenthesized expression and return index after ')'."""
        if not self.is_op(i, "("):
            self.fail(i, "expected '('")
        rp = self.match[i]
        saved = self.current_stmt
        self.current_stmt = None
        self.scan_expr(i + 1, rp, ctx)
        self.current_stmt = saved
        return rp + 1

    def parse_statement(self, i, hi, ctx, block_level):
        tok = self.toks[i]
        t = tok.text
        if tok.kind == "op":
            if t == "{":
                self.parse_block(i, ctx)
                return self.match[i] + 1
            if t == ";":
                return i + 1
        if tok.kind == "ident" and self.is_op(i + 1, ":"):
            return self.parse_statement(i + 2, hi, ctx, False)
        if tok.kind == "keyword":
            if t in ("if", "while"):
                j = self.paren_expr(i + 1, ctx)
                j = self.parse_statement(j, hi, ctx, False)
                if t == "if" and self.tx(j) == "else":
                    j = self.parse_statement(j + 1, hi, ctx, False)
                return j
            if t == "synchronized" and self.is_op(i + 1, "("):
                j = self.paren_expr(i + 1, ctx)
                return self.parse_statement(j, hi, ctx, True)
            if t == "switch":
                j = self.paren_expr(i + 1, ctx)
                self.parse_switch_body(j, ctx)
                end = self.match[j] + 1
                if self.is_op(end, ";"):
                    end += 1
                return end
            if t == "for":
                return self.parse_for(i, hi, ctx)
            if t == "do":
                j = self.parse_statement(i + 1, hi, ctx, False)
                if self.tx(j) != "while":
                    self.fail(j, "expected 'while'")
                j = self.paren_expr(j + 1, ctx)
                if not self.is_op(j, ";"):
                    self.fail(j, "expected ';'")
                return j + 1
            if t == "try":
                return self.parse_try(i, hi, ctx)
            if t in ("return", "throw", "break", "continue", "assert"):
                end = self.expr_end(i + 1, hi, (";",))
                if end >= hi:
                    self.fail(i, "unterminated statement")
                kind = t if t in ("return", "throw") else "other"
                idx = self.add_statement(i, end, kind, block_level, ctx)
                saved = self.current_stmt
                self.current_stmt = idx
                self.scan_expr(i + 1, end, ctx)
                self.current_stmt = saved
                return end + 1
        # local type declarations
        start = i
        j, mods, annots = self.skip_modifiers(i)
        if self.is_type_keyword(j):
            owner = _ClassState(ctx.cls or "", ctx.top or "")
            return self.type_decl(start, j, owner)
        if tok.kind == "ident" and t == "yield" and not self.is_op(i + 1, "=") and not self.is_op(i + 1, "("):
            end = self.expr_end(i + 1, hi, (";",))
            self.scan_expr(i + 1, end, ctx)
            return end + 1
        end = self.expr_end(j, hi, (";",))
        if end >= hi:
            self.fail(i, "unterminated statement")
        decl = self.local_decl_type(j)
        if decl is not None:
            after_type, type_text = decl
            idx = self.add_statement(start, end, "local", block_level, ctx)
            saved = self.current_stmt
            self.current_stmt = idx
            self.declarators(after_type, end, type_text, "final" in mods, "local", ctx, self.span(start, end), idx)
            self.current_stmt = saved
            return end + 1
        idx = self.add_statement(start, end, "expr", block_level, ctx)
        saved = self.current_stmt
        self.current_stmt = idx
        self.maybe_assignment(start, end, ctx, idx)
        self.scan_expr(start, end, ctx)
        self.current_stmt = saved
        return end + 1

    def local_decl_type(self, j):
        parsed = self.parse_type(j)
        if parsed is None:
            return None
        k, type_text = parsed
        if k < self.n and self.toks[k].kind == "ident" and self.tx(k + 1) in ("=", ";", ",", "[", ":"):
            return parsed
        return None

    def maybe_assignment(self, lo, hi, ctx, idx):
        j = lo
        if self.tx(j) == "this" and self.is_op(j + 1, "."):
            j += 2
        if j < hi and self.toks[j].kind == "ident" and self.is_op(j + 1, "=") and j + 2 < hi:
            self.assignments.append(
                Assignment(
                    lhs_name=self.toks[j].text,
                    lhs_span=self.span(lo, j),
                    rhs_span=self.range_span(j + 2, hi),
                    statement_span=self.span(lo, hi),
                    enclosing_method=ctx.method,
                    enclosing_class=ctx.cls,
                    top_class=ctx.top,
                    statement=idx,
                )
            )

    def parse_switch_body(self, lb, ctx):
        if not self.is_op(lb, "{"):
            self.fail(lb, "expected switch body")
        rb = self.match[lb]
        i = lb + 1
        while i < rb:
            t = self.tx(i)
            if t in ("case", "default") and self.toks[i].kind == "keyword":
                stop = self.expr_end(i + 1, rb, (":", "->"))
                self.scan_expr(i + 1, stop, ctx)
                if self.is_op(stop, "->"):
                    i = stop + 1
                    if self.is_op(i, "{"):
                        self.parse_block(i, ctx)
                        i = self.match[i] + 1
                    else:
                        i = self.parse_statement(i, rb, ctx, False)
                    continue
                i = stop + 1
                continue
            i = self.parse_statement(i, rb, ctx, True)

    def parse_for(self, i, hi, ctx):
        lp = i + 1
        if not self.is_op(lp, "("):
            self.fail(lp, "expected '(' after for")
        rp = self.match[lp]
        colon = self.expr_end(lp + 1, rp, (":", ";"))
        if colon < rp and self.is_op(colon, ":"):
            j, mods, _ = self.skip_modifiers(lp + 1)
            parsed = self.parse_type(j)
            if parsed is None or self.toks[parsed[0]].kind != "ident":
                self.fail(j, "bad enhanced-for variable")
            name_idx, type_text = parsed
            nt = self.toks[name_idx]
            self.var_decls.append(
                VarDecl(nt.text, type_text, "final" in mods, None, None, Span(self.path, nt.start, nt.end),
                        "foreach", ctx.method, ctx.cls, ctx.top)
            )
            saved = self.current_stmt
            self.current_stmt = None
            self.scan_expr(colon + 1, rp, ctx)
            self.current_stmt = saved
        else:
            saved = self.current_stmt
            self.current_stmt = None
            first = colon
            j, mods, _ = self.skip_modifiers(lp + 1)
            decl = self.local_decl_type(j) if j < first else None
            if decl is not None:
                self.declarators(decl[0], first, decl[1], "final" in mods, "for", ctx, None)
            else:
                self.scan_expr(lp + 1, first, ctx)
            self.scan_expr(min(first + 1, rp), rp, ctx)
            self.current_stmt = saved
        return self.parse_statement(rp + 1, hi, ctx, False)

    def parse_try(self, i, hi, ctx):
        j = i + 1
        if self.is_op(j, "("):
            rp = self.match[j]
            for lo, rhi in self.split_semicolons(j + 1, rp):
                k, mods, _ = self.skip_modifiers(lo)
                decl = self.local_decl_type(k)
                if decl is not None:
                    self.declarators(decl[0], rhi, decl[1], True, "resource", ctx, None)
                else:
                    self.scan_expr(lo, rhi, ctx)
            j = rp + 1
        if not self.is_op(j, "{"):
            self.fail(j, "expected try block")
        self.parse_block(j, ctx)
        j = self.match[j] + 1
        while self.tx(j) == "catch":
            lp = j + 1
            rp = self.match[lp]
            k, mods, _ = self.skip_modifiers(lp + 1)
            name_idx = rp - 1
            nt = self.toks[name_idx]
            type_text = "".join(t.text for t in self.toks[k:name_idx])
            self.var_decls.append(
                VarDecl(nt.text, type_text, "final" in mods, None, None, Span(self.path, nt.start, nt.end),
                        "catch", ctx.method, ctx.cls, ctx.top)
            )
            j = rp + 1
            self.parse_block(j, ctx)
            j = self.match[j] + 1
        if self.tx(j) == "finally":
            self.parse_block(j + 1, ctx)
            j = self.match[j + 1] + 1
        return j

    def split_semicolons(self, lo, hi):
        parts = []
        j = lo
        while j < hi:
            k = self.expr_end(j, hi, (";",))
            if j < k:
                parts.append((j, k))
            j = k + 1
        return parts

    # -- expressions -------------------------------------------------------

    def scan_expr(self, lo, hi, ctx):
        i = lo
        while i < hi:
            tok = self.toks[i]
            kind = tok.kind
            if kind == "string":
                self.strings.append(
                    StringLiteral(tok.text, Span(self.path, tok.start, tok.end), ctx.method, ctx.cls, ctx.top)
                )
            elif kind == "keyword" and tok.text == "new":
                i = self.instantiation(i, hi, ctx)
                continue
            elif kind == "ident" and self.is_op(i + 1, "("):
                self.invocation(i, ctx)
            elif kind == "op" and tok.text == "->" and self.is_op(i + 1, "{"):
                saved = self.current_stmt
                self.parse_block(i + 1, ctx)
                self.current_stmt = saved
                i = self.match[i + 1] + 1
                continue
            elif kind == "keyword" and tok.text == "switch" and self.is_op(i + 1, "("):
                j = self.paren_expr(i + 1, ctx)
                if self.is_op(j, "{"):
                    saved = self.current_stmt
                    self.parse_switch_body(j, ctx)
                    self.current_stmt = saved
                    i = self.match[j] + 1
                    continue
                i = j
                continue
            i += 1

    def receiver_start(self, dot):
        """Walk back from the '.' before a method name to the start of the receiver chain."""
        j = dot - 1
        start = None
        while j >= 0:
            tok = self.toks[j]
            parenthesized = False
            if tok.kind == "op" and tok.text == ")":
                open_idx = self.match[j]
                prev = open_idx - 1
                if prev >= 0 and (self.toks[prev].kind == "ident" or self.toks[prev].text in ("this", "super")):
                    seg = prev
                else:
                    seg = open_idx
                    parenthesized = True
            elif tok.kind == "op" and tok.text == "]":
                start = self.match[j]
                j = start - 1
                continue
            elif tok.kind in ("ident", "string", "number", "char") or tok.text in ("this", "super", "class"):
                seg = j
            else:
                break
            start = seg
            if seg >= 1 and self.toks[seg - 1].text == "new":
                start = seg - 1
                break
            if parenthesized:
                break
            if seg >= 2 and self.is_op(seg - 1, "."):
                j = seg - 2
                continue
            break
        return start

    def invocation(self, i, ctx):
        lp = i + 1
        rp = self.match[lp]
        receiver = None
        receiver_span = None
        start = i
        if i >= 1 and self.is_op(i - 1, "."):
            rs = self.receiver_start(i - 1)
            if rs is not None:
                start = rs
                receiver = self.text[self.toks[rs].start:self.toks[i - 2].end]
                receiver_span = Span(self.path, self.toks[rs].start, self.toks[i - 2].end)
        args = tuple(self.range_span(lo, hi) for lo, hi in self.split_commas(lp + 1, rp))
        self.invocations.append(
            Invocation(
                receiver_text=receiver,
                method_name=self.toks[i].text,
                name_span=Span(self.path, self.toks[i].start, self.toks[i].end),
                argument_spans=args,
                call_span=Span(self.path, self.toks[start].start, self.toks[rp].end),
                enclosing_method=ctx.method,
                enclosing_class=ctx.cls,
                top_class=ctx.top,
                statement=self.current_stmt,
                receiver_span=receiver_span,
            )
        )

    def instantiation(self, i, hi, ctx):
        j, class_name = self.skip_new_type(i + 1)
        if self.is_op(j, "("):
            rp = self.match[j]
            args = tuple(self.range_span(lo, ahi) for lo, ahi in self.split_commas(j + 1, rp))
            self.scan_expr(j + 1, rp, ctx)
            end = rp
            has_body = False
            if self.is_op(rp + 1, "{"):
                has_body = True
                owner = _ClassState(ctx.cls or "", ctx.top or "")
                anon = self.anon_state(owner)
                body_close = self.match[rp + 1]
                saved = self.current_stmt
                before = len(self.methods)
                self.parse_class_body(rp + 2, body_close, anon)
                self.current_stmt = saved
                overrides = tuple(
                    m.override_span
                    for m in self.methods[before:]
                    if m.enclosing_class == anon.name and m.override_span is not None
                )
                self.class_decls.append(
                    ClassDecl(
                        name=anon.name,
                        kind="anonymous",
                        implements_names=(class_name.rsplit(".", 1)[-1],),
                        implements_spans=(),
                        implements_clause_span=None,
                        override_annotation_spans=overrides,
                        span=self.span(i, body_close),
                        body_span=self.span(rp + 1, body_close),
                        enclosing_class=ctx.cls,
                        top_class=ctx.top or anon.top,
                    )
                )
                end = body_close
            self.instantiations.append(
                Instantiation(
                    class_name=class_name,
                    argument_spans=args,
                    span=self.span(i, end),
                    enclosing_method=ctx.method,
                    enclosing_class=ctx.cls,
                    top_class=ctx.top,
                    statement=self.current_stmt,
                    chained=self.is_op(end + 1, "."),
                    has_body=has_body,
                )
            )
            return end + 1
        # array creation: dimensions and initializer are scanned by the caller
        return j


def parse_java_text(text: str, path: str) -> SyntaxView:
    return _Parser(text, path).parse()


def parse_java(file) -> SyntaxView:
    """Build the syntax view of a JavaSource file (``file.content`` is bytes)."""
    return parse_java_text(file.content.decode("latin-1"), file.relative_path)
