import pytest
from hypothesis import given, strategies as st

from droidmut.errors import ParseFailure
from droidmut.syntax import parse_xml_bytes


def test_string_element_slices():
    data = b'<resources><string name="app_name">Hi</string></resources>'
    view = parse_xml_bytes(data, "strings.xml")
    (s,) = view.find("string")
    assert s.get("name") == "app_name"
    assert s.content_span.slice(data) == b"Hi"
    assert s.attribute("name").value_span.slice(data) == b"app_name"


def test_self_closing_permission_span():
    data = (b'<manifest xmlns:android="http://schemas.android.com/apk/res/android">\n'
            b'  <uses-permission android:name="android.permission.INTERNET"/>\n</manifest>\n')
    view = parse_xml_bytes(data, "AndroidManifest.xml")
    (perm,) = view.find("uses-permission")
    assert perm.self_closing and perm.content_span is None
    assert perm.element_span.slice(data) == b'<uses-permission android:name="android.permission.INTERNET"/>'
    assert perm.parent == 0


def test_truncated_xml_fails():
    with pytest.raises(ParseFailure):
        parse_xml_bytes(b'<resources><string name="a">x</str', "strings.xml")


def test_comments_cdata_and_single_quotes():
    data = (b"<?xml version='1.0'?>\n<!-- <fake attr=\"1\"/> -->\n"
            b"<r a='one' b = \"two\"><![CDATA[<not-an-element/>]]><c/></r>")
    view = parse_xml_bytes(data, "x.xml")
    assert [e.tag_name for e in view.elements] == ["r", "c"]
    r = view.elements[0]
    assert r.get("a") == "one" and r.get("b") == "two"
    assert r.attribute("b").value_span.slice(data) == b"two"
    assert view.children(0) == [1]


_attr_values = st.text(alphabet="abcXYZ019 _-./#@", max_size=12)


@given(st.lists(st.tuples(st.sampled_from(["a", "b", "android:name"]), _attr_values), max_size=3,
                unique_by=lambda t: t[0]),
       st.text(alphabet="hello world,.!", max_size=20))
def test_spans_reproduce_bytes(attrs, body):
    attr_text = " ".join(f'{k}="{v}"' for k, v in attrs)
    data = f"<root>\n  <item {attr_text}>{body}</item>\n  <leaf {attr_text}/>\n</root>".encode()
    view = parse_xml_bytes(data, "g.xml")
    item = view.find("item")[0]
    assert item.content_span.slice(data).decode() == body
    for el in view.elements:
        assert el.element_span.slice(data).startswith(b"<" + el.tag_name.encode())
        assert el.element_span.slice(data).endswith(b">")
        for a in el.attributes:
            assert a.value_span.slice(data).decode() == a.value
