"""Canonical XML export of a corpus and its derived structures.

The document is rendered by hand so its byte form is canonical: two-space
indentation, attributes in a fixed order, double-quoted values, LF line
ends, and ISO-8601 UTC dates.  parse_corpus_xml inverts render_corpus_xml
field for field, so export -> parse -> export is byte-identical.
"""

from __future__ import annotations

from xml.etree import ElementTree
from xml.sax.saxutils import quoteattr

from hybridweave.ingest.dates import format_utc


def _attrs(pairs: list[tuple[str, object]]) -> str:
    return "".join(f" {key}={quoteattr(str(value))}" for key, value in pairs)


def corpus_xml_model(actors, messages, commits, peps) -> dict:
    """Reduce dataset JSON lists to the fields the XML schema carries.

    Input lists arrive in their serialized order (actors by id, messages
    and commits by timestamp then id, peps by number) and that order is
    kept.
    """
    model: dict = {"actors": [], "messages": [], "commits": [], "peps": []}
    for a in actors:
        model["actors"].append(
            {"id": a["id"], "kind": a["kind"], "role": a.get("role", "")}
        )
    for m in messages:
        model["messages"].append(
            {
                "id": m["id"],
                "author": m["author"],
                "date": format_utc(m["sent_at"]),
                "list": m["source_list"],
                "quotes": [
                    {
                        "source": q["cited"] or "",
                        "block": int(q["block_index"]),
                        "chars": int(q["match_chars"]),
                    }
                    for q in m["quotes"]
                ],
            }
        )
    for c in commits:
        model["commits"].append(
            {
                "file": c["file_path"],
                "revision": c["revision"],
                "author": c["author"],
                "date": format_utc(c["committed_at"]),
                "added": int(c["lines_added"]),
                "removed": int(c["lines_removed"]),
            }
        )
    for p in peps:
        model["peps"].append(
            {
                "number": int(p["number"]),
                "status": p["status"],
                "champion": p["champion"],
                "events": [
                    {"status": e["status"], "date": format_utc(e["at"])}
                    for e in p["history"]
                ],
            }
        )
    return model


def render_corpus_xml(model: dict) -> str:
    """Serialize a corpus model into the canonical XML byte form."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<corpus>"]
    for a in model["actors"]:
        lines.append(
            "  <actor"
            + _attrs([("id", a["id"]), ("kind", a["kind"]), ("role", a["role"])])
            + "/>"
        )
    for m in model["messages"]:
        head = "  <message" + _attrs(
            [
                ("id", m["id"]),
                ("author", m["author"]),
                ("date", m["date"]),
                ("list", m["list"]),
            ]
        )
        if m["quotes"]:
            lines.append(head + ">")
            for q in m["quotes"]:
                lines.append(
                    "    <quote"
                    + _attrs(
                        [
                            ("source", q["source"]),
                            ("block", q["block"]),
                            ("chars", q["chars"]),
                        ]
                    )
                    + "/>"
                )
            lines.append("  </message>")
        else:
            lines.append(head + "/>")
    for c in model["commits"]:
        lines.append(
            "  <commit"
            + _attrs(
                [
                    ("file", c["file"]),
                    ("revision", c["revision"]),
                    ("author", c["author"]),
                    ("date", c["date"]),
                    ("added", c["added"]),
                    ("removed", c["removed"]),
                ]
            )
            + "/>"
        )
    for p in model["peps"]:
        head = "  <pep" + _attrs(
            [
                ("number", p["number"]),
                ("status", p["status"]),
                ("champion", p["champion"]),
            ]
        )
        if p["events"]:
            lines.append(head + ">")
            for e in p["events"]:
                lines.append(
                    "    <event"
                    + _attrs([("status", e["status"]), ("date", e["date"])])
                    + "/>"
                )
            lines.append("  </pep>")
        else:
            lines.append(head + "/>")
    lines.append("</corpus>")
    return "\n".join(lines) + "\n"


def parse_corpus_xml(text: str) -> dict:
    """Parse a rendered document back into the corpus model."""
    root = ElementTree.fromstring(text)
    if root.tag != "corpus":
        raise ValueError(f"expected <corpus> root, got <{root.tag}>")
    model: dict = {"actors": [], "messages": [], "commits": [], "peps": []}
    for element in root:
        if element.tag == "actor":
            model["actors"].append(
                {
                    "id": element.get("id", ""),
                    "kind": element.get("kind", ""),
                    "role": element.get("role", ""),
                }
            )
        elif element.tag == "message":
            model["messages"].append(
                {
                    "id": element.get("id", ""),
                    "author": element.get("author", ""),
                    "date": element.get("date", ""),
                    "list": element.get("list", ""),
                    "quotes": [
                        {
                            "source": quote.get("source", ""),
                            "block": int(quote.get("block", "0")),
                            "chars": int(quote.get("chars", "0")),
                        }
                        for quote in element
                        if quote.tag == "quote"
                    ],
                }
            )
        elif element.tag == "commit":
            model["commits"].append(
                {
                    "file": element.get("file", ""),
                    "revision": element.get("revision", ""),
                    "author": element.get("author", ""),
                    "date": element.get("date", ""),
                    "added": int(element.get("added", "0")),
                    "removed": int(element.get("removed", "0")),
                }
            )
        elif element.tag == "pep":
            model["peps"].append(
                {
                    "number": int(element.get("number", "0")),
                    "status": element.get("status", ""),
                    "champion": element.get("champion", ""),
                    "events": [
                        {"status": e.get("status", ""), "date": e.get("date", "")}
                        for e in element
                        if e.tag == "event"
                    ],
                }
            )
        else:
            raise ValueError(f"unexpected element <{element.tag}> in corpus")
    return model


def corpus_xml_from_json(actors, messages, commits, peps) -> str:
    """Canonical XML straight from the dataset's JSON lists."""
    return render_corpus_xml(corpus_xml_model(actors, messages, commits, peps))
