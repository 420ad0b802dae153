"""Reading and writing networks and results.

Pajek two-mode networks look like::

    *Vertices 5 3
    1 "a"
    ...
    *Edges
    1 4 2

Nodes ``1..n1`` form the first mode.  ``*Edges`` lines are undirected,
``*Arcs`` lines directed; the optional third column is the weight.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from pathlib import Path
from typing import IO, Iterable

from .network import BipartiteNetwork, Link, NetworkError, NodeSubset


class FormatError(NetworkError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _text(src) -> str:
    if isinstance(src, bytes):
        return src.decode("utf-8")
    if isinstance(src, str):
        return src
    if isinstance(src, Path):
        return src.read_text(encoding="utf-8")
    data = src.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def fmt_number(x: float) -> str:
    """Shortest text that reads back as the same float."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


# ---------------------------------------------------------------- Pajek .net

_VERTEX = re.compile(r'^(\d+)(?:\s+(?:"([^"]*)"|(\S+)))?')


def load_pajek(src) -> BipartiteNetwork:
    n = n1 = None
    labels: list[str] | None = None
    links: list[Link] = []
    section = None
    for lineno, raw in enumerate(_text(src).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            words = line.split()
            section = words[0].lower()
            if section == "*vertices":
                if len(words) < 3:
                    raise FormatError("two-mode header must read '*vertices n n1'", lineno)
                try:
                    n, n1 = int(words[1]), int(words[2])
                except ValueError:
                    raise FormatError(f"malformed header {line!r}", lineno) from None
                if not 0 <= n1 <= n:
                    raise FormatError(f"malformed header {line!r}: need 0 <= n1 <= n", lineno)
                labels = [str(i + 1) for i in range(n)]
            elif section in ("*edges", "*arcs"):
                if n is None:
                    raise FormatError(f"{words[0]} before *vertices", lineno)
            elif section != "*network":
                raise FormatError(f"unsupported section {words[0]}", lineno)
            continue
        if section == "*vertices":
            m = _VERTEX.match(line)
            if not m:
                raise FormatError(f"bad vertex line {line!r}", lineno)
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise FormatError(f"vertex {i} out of range 1..{n}", lineno)
            label = m.group(2) if m.group(2) is not None else m.group(3)
            if label is not None:
                labels[i - 1] = label
        elif section in ("*edges", "*arcs"):
            parts = line.split()
            try:
                i, j = int(parts[0]), int(parts[1])
                w = float(parts[2]) if len(parts) > 2 else 1.0
            except (ValueError, IndexError):
                raise FormatError(f"bad link line {line!r}", lineno) from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise FormatError(f"link {i} {j}: index out of range 1..{n}", lineno)
            if (i <= n1) == (j <= n1):
                raise FormatError(f"link {i} {j} joins two nodes of the same mode", lineno)
            if not w > 0:
                raise FormatError(f"link {i} {j}: weight must be positive, got {w}", lineno)
            links.append(Link(i - 1, j - 1, w, section == "*arcs", True))
        else:
            raise FormatError(f"data outside of a section: {line!r}", lineno)
    if n is None:
        raise FormatError("missing '*vertices n n1' header")
    return BipartiteNetwork(n1, n - n1, links, labels)


def save_pajek(net: BipartiteNetwork) -> str:
    out = [f"*Vertices {net.n} {net.n1}"]
    for i, label in enumerate(net.labels, 1):
        if '"' in label:
            raise FormatError(f"label {label!r} cannot be written to Pajek")
        out.append(f'{i} "{label}"')
    edges = [link for link in net.links if not link.directed]
    arcs = [link for link in net.links if link.directed]
    if edges or not arcs:
        out.append("*Edges")
        out += [f"{l.u + 1} {l.v + 1} {fmt_number(l.weight)}" for l in edges]
    if arcs:
        out.append("*Arcs")
        out += [f"{l.tail + 1} {l.head + 1} {fmt_number(l.weight)}" for l in arcs]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- edge list


def load_edgelist(src, n1: int | None = None, n2: int | None = None) -> BipartiteNetwork:
    """Whitespace/TAB separated ``u v [w]`` lines; column decides the mode.

    Declared counts larger than the number of labels seen add isolated nodes.
    """
    first: dict[str, int] = {}
    second: dict[str, int] = {}
    raw_links = []
    for lineno, raw in enumerate(_text(src).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        parts = [p.strip() for p in parts]
        if len(parts) not in (2, 3):
            raise FormatError(f"expected 'u v [w]', got {line!r}", lineno)
        u, v = parts[0], parts[1]
        try:
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise FormatError(f"bad weight {parts[2]!r}", lineno) from None
        if not w > 0:
            raise FormatError(f"weight must be positive, got {w}", lineno)
        if u in second or v in first or u == v:
            bad = u if (u in second or u == v) else v
            raise FormatError(f"label {bad!r} appears in both columns", lineno)
        first.setdefault(u, len(first))
        second.setdefault(v, len(second))
        raw_links.append((first[u], second[v], w))
    labels1, labels2 = list(first), list(second)
    for declared, labels, prefix in ((n1, labels1, "r"), (n2, labels2, "c")):
        if declared is None:
            continue
        if declared < len(labels):
            raise FormatError(f"{len(labels)} labels seen but only {declared} declared")
        taken = set(labels1) | set(labels2)
        k = 0
        while len(labels) < declared:
            k += 1
            if f"{prefix}{k}" not in taken:
                labels.append(f"{prefix}{k}")
    offset = len(labels1)
    links = [Link(u, offset + v, w) for u, v, w in raw_links]
    return BipartiteNetwork(len(labels1), len(labels2), links, labels1 + labels2)


# ---------------------------------------------------------------- JSON


def network_to_dict(net: BipartiteNetwork) -> dict:
    lab = net.labels
    links = []
    for l in net.links:
        item = {"u": lab[l.u], "v": lab[l.v], "w": l.weight}
        if l.directed:
            item["directed"] = True
            item["forward"] = l.forward
        links.append(item)
    return {
        "n1": net.n1,
        "n2": net.n2,
        "labels": list(lab),
        "links": links,
        "t": list(net.t) if net.has_measurement else None,
    }


def network_from_dict(data: dict) -> BipartiteNetwork:
    try:
        labels = data["labels"]
        index = {x: i for i, x in enumerate(labels)}
        links = [
            Link(index[d["u"]], index[d["v"]], float(d.get("w", 1.0)),
                 bool(d.get("directed", False)), bool(d.get("forward", True)))
            for d in data["links"]
        ]
        return BipartiteNetwork(data["n1"], data["n2"], links, labels, data.get("t"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad network JSON: {exc}") from None


def load_network(path: str | Path, t_path: str | Path | None = None) -> BipartiteNetwork:
    """Load by extension: ``.json``, ``.tsv``/``.txt``/``.csv`` edge lists, else Pajek."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    suffix = path.suffix.lower()
    if suffix == ".json":
        try:
            net = network_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None
    elif suffix in (".tsv", ".txt", ".csv", ".edges"):
        net = load_edgelist(text)
    else:
        net = load_pajek(text)
    if t_path is not None:
        t = read_vec(Path(t_path).read_text(encoding="utf-8"))
        net = BipartiteNetwork(net.n1, net.n2, net.links, net.labels, t)
    return net


# ---------------------------------------------------------------- partitions / vectors


def write_clu(core: NodeSubset) -> str:
    return "\n".join([f"*Vertices {core.net.n}"] + [str(b) for b in core.member]) + "\n"


def write_vec(values: Iterable[float]) -> str:
    values = list(values)
    return "\n".join([f"*Vertices {len(values)}"] + [fmt_number(x) for x in values]) + "\n"


def _read_column(text: str, conv) -> list:
    lines = [l.strip() for l in _text(text).splitlines()]
    lines = [l for l in lines if l and not l.startswith("%")]
    if not lines or not lines[0].lower().startswith("*vertices"):
        raise FormatError("missing *Vertices header")
    try:
        n = int(lines[0].split()[1])
        values = [conv(l.split()[0]) for l in lines[1:]]
    except (ValueError, IndexError):
        raise FormatError("malformed partition/vector file") from None
    if len(values) != n:
        raise FormatError(f"header announces {n} values, found {len(values)}")
    return values


def read_clu(text) -> list[int]:
    return _read_column(text, int)


def read_vec(text) -> list[float]:
    return _read_column(text, float)


# ---------------------------------------------------------------- CSV


def write_csv(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt_number(x) if isinstance(x, float) else x for x in row])
    return buf.getvalue()


def read_csv(text) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(_text(text))))


def levels_csv(lv) -> str:
    net = lv.net
    return write_csv(
        ["label", "mode", "T"], ((net.labels[v], net.mode(v), float(x)) for v, x in enumerate(lv.T))
    )


def sizes_csv(lv) -> str:
    return write_csv(
        ["q" if lv.fixed_mode == 1 else "p", "size1", "size2", "size"],
        ((float(level), s1, s2, s1 + s2) for level, s1, s2 in lv.size_curve()),
    )


def staircase_csv(stairs) -> str:
    # rows in sweep order: largest p first
    rows = [(float(c.p), float(c.q), c.size1, c.size2) for c in stairs]
    return write_csv(["p", "q", "size1", "size2"], reversed(rows))


def read_staircase_csv(text) -> list[tuple[float, float, int, int]]:
    return [
        (float(r["p"]), float(r["q"]), int(r["size1"]), int(r["size2"])) for r in read_csv(text)
    ]


def dump_json(obj: dict, fp: IO[str] | None = None) -> str:
    text = json.dumps(obj, indent=2, allow_nan=False) + "\n"
    if fp is not None:
        fp.write(text)
    return text
