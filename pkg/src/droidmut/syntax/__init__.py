"""Span-preserving syntactic views over Java sources and XML resources."""

from .java import (
    Assignment,
    ClassDecl,
    Instantiation,
    Invocation,
    MethodDecl,
    Statement,
    StringLiteral,
    SyntaxView,
    VarDecl,
    parse_java,
    parse_java_text,
    tokenize,
)
from .spans import Span
from .xml import XmlAttribute, XmlElement, XmlView, parse_xml, parse_xml_bytes

__all__ = [
    "Assignment",
    "ClassDecl",
    "Instantiation",
    "Invocation",
    "MethodDecl",
    "Span",
    "Statement",
    "StringLiteral",
    "SyntaxView",
    "VarDecl",
    "XmlAttribute",
    "XmlElement",
    "XmlView",
    "parse_java",
    "parse_java_text",
    "parse_xml",
    "parse_xml_bytes",
    "tokenize",
]
