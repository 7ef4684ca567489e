"""Span-preserving XML view for manifests and resource files.

Well-formedness is judged by expat; the spans come from a small scanner of
our own because the standard parsers do not report attribute offsets.
"""

from __future__ import annotations

import re
import xml.parsers.expat
from dataclasses import dataclass
from typing import Optional

from ..errors import ParseFailure
from .spans import Span

_NAME = r"[A-Za-z_:\x80-\xff][-A-Za-z0-9_:.\x80-\xff]*"
_ATTR_RE = re.compile(r"\s*(" + _NAME + r")\s*=\s*(?:\"([^\"]*)\"|'([^']*)')", re.DOTALL)
_NAME_RE = re.compile(_NAME)


@dataclass(frozen=True)
class XmlAttribute:
    name: str
    value: str
    value_span: Span
    span: Span


@dataclass(frozen=True)
class XmlElement:
    tag_name: str
    attributes: tuple
    element_span: Span
    start_tag_span: Span
    content_span: Optional[Span]  # None for self-closing elements
    parent: Optional[int]
    self_closing: bool

    def attribute(self, name):
        for attr in self.attributes:
            if attr.name == name:
                return attr
        return None

    def get(self, name, default=None):
        attr = self.attribute(name)
        return attr.value if attr is not None else default


@dataclass(frozen=True)
class XmlView:
    path: str
    elements: tuple
    well_formed: bool = True

    def children(self, index):
        return [i for i, el in enumerate(self.elements) if el.parent == index]

    def find(self, tag_name):
        return [el for el in self.elements if el.tag_name == tag_name]

    def text(self, index, content: bytes) -> Optional[bytes]:
        span = self.elements[index].content_span
        return None if span is None else span.slice(content)


def _check_well_formed(data: bytes, path: str):
    parser = xml.parsers.expat.ParserCreate()
    try:
        parser.Parse(data, True)
    except xml.parsers.expat.ExpatError as exc:
        line_start = 0
        for _ in range(exc.lineno - 1):
            nl = data.find(b"\n", line_start)
            if nl < 0:
                break
            line_start = nl + 1
        raise ParseFailure(path, f"malformed XML: {xml.parsers.expat.ErrorString(exc.code)}",
                           line_start + exc.offset) from None


def parse_xml_bytes(data: bytes, path: str) -> XmlView:
    _check_well_formed(data, path)
    text = data.decode("latin-1")
    elements = []
    stack = []
    pos = 0
    n = len(text)
    while True:
        lt = text.find("<", pos)
        if lt < 0:
            break
        if text.startswith("<!--", lt):
            pos = text.index("-->", lt + 4) + 3
        elif text.startswith("<![CDATA[", lt):
            pos = text.index("]]>", lt + 9) + 3
        elif text.startswith("<?", lt):
            pos = text.index("?>", lt + 2) + 2
        elif text.startswith("<!", lt):
            pos = _skip_doctype(text, lt)
        elif text.startswith("</", lt):
            gt = text.index(">", lt)
            name = text[lt + 2:gt].strip()
            idx = stack.pop()
            el = elements[idx]
            if el["tag_name"] != name:
                raise ParseFailure(path, f"mismatched </{name}>", lt)
            el["element_span"] = Span(path, el["start"], gt + 1)
            el["content_span"] = Span(path, el["start_tag_end"], lt)
            pos = gt + 1
        else:
            m = _NAME_RE.match(text, lt + 1)
            name = m.group()
            j = m.end()
            attrs = []
            while True:
                am = _ATTR_RE.match(text, j)
                if am is None:
                    break
                group = 2 if am.group(2) is not None else 3
                attrs.append(
                    XmlAttribute(
                        name=am.group(1),
                        value=am.group(group),
                        value_span=Span(path, am.start(group), am.end(group)),
                        span=Span(path, am.start(1), am.end()),
                    )
                )
                j = am.end()
            while j < n and text[j] in " \t\r\n":
                j += 1
            self_closing = text.startswith("/>", j)
            gt = j + 2 if self_closing else j + 1
            record = {
                "tag_name": name,
                "attributes": tuple(attrs),
                "start": lt,
                "start_tag_end": gt,
                "parent": stack[-1] if stack else None,
                "self_closing": self_closing,
            }
            if self_closing:
                record["element_span"] = Span(path, lt, gt)
                record["content_span"] = None
            elements.append(record)
            if not self_closing:
                stack.append(len(elements) - 1)
            pos = gt
    return XmlView(
        path=path,
        elements=tuple(
            XmlElement(
                tag_name=r["tag_name"],
                attributes=r["attributes"],
                element_span=r["element_span"],
                start_tag_span=Span(path, r["start"], r["start_tag_end"]),
                content_span=r["content_span"],
                parent=r["parent"],
                self_closing=r["self_closing"],
            )
            for r in elements
        ),
    )


def _skip_doctype(text, lt):
    depth = 0
    j = lt + 2
    while j < len(text):
        c = text[j]
        if c == "[":
            depth += 1
        elif c == "]":
            depth -= 1
        elif c == ">" and depth == 0:
            return j + 1
        j += 1
    return j


def parse_xml(file) -> XmlView:
    """Build the XML view of a manifest or resource file."""
    return parse_xml_bytes(file.content, file.relative_path)
