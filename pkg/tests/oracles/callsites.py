"""Regex call-site counter used as an independent check on the Java parser.

Counts ``name(`` occurrences outside comments and literals, then drops
control keywords, method declarations and constructor calls (``new X(``).
"""
import re

KEYWORDS = {"if", "for", "while", "switch", "catch", "synchronized", "return", "super", "this"}
NOT_TYPES = {"return", "else", "case", "throw", "new"}


def strip(source):
    s = re.sub(r"//[^\n]*|/\*.*?\*/", " ", source, flags=re.S)
    s = re.sub(r'"(?:\\.|[^"\\\n])*"', '""', s)
    return re.sub(r"'(?:\\.|[^'\\\n])*'", "''", s)


def _prev_token(text, end):
    m = re.search(r"(\w+|[^\w\s])\s*$", text[:end])
    return (m.group(1), m.start(1)) if m else ("", 0)


def call_sites(source):
    s = strip(source)
    calls, decls, news = [], [], []
    for m in re.finditer(r"(\w+)\s*\(", s):
        name = m.group(1)
        if name in KEYWORDS:
            continue
        prev, pos = _prev_token(s, m.start())
        # walk back over a dotted qualifier: a.b.name( or new pkg.Type(
        head = prev
        while head == ".":
            word, pos = _prev_token(s, pos)
            head, pos = _prev_token(s, pos)
            if not re.fullmatch(r"\w+", word):
                break
        if head == "new":
            news.append(name)
        elif prev != "." and (re.fullmatch(r"\w+", prev) or prev in ("]", ">")) and prev not in NOT_TYPES:
            decls.append(name)
        else:
            calls.append(name)
    return calls, decls, news
