"""Regenerates the fixture rotation systems with networkx.

Each output line is `label: n1 n2 ...`, neighbours counter-clockwise.
"""

import networkx as nx


def s_graph(x, y):
    g = nx.Graph()
    xs = [f"v{i}" for i in range(1, x + 1)]
    ys = [f"w{j}" for j in range(1, y - 1)] + [f"v{x}", f"v{x - 1}"]
    for face in (xs, ys):
        for a, b in zip(face, face[1:] + face[:1]):
            g.add_edge(a, b)
    for i in range(1, x - 1):
        g.add_edge("w1", f"v{i}")
    for j in range(1, y - 1):
        g.add_edge("v1", f"w{j}")
    return g


def rotation_text(g, emb=None):
    if emb is None:
        ok, emb = nx.check_planarity(g)
        assert ok
    lines = []
    for v in sorted(emb.nodes(), key=sort_key):
        ccw = list(reversed(list(emb.neighbors_cw_order(v))))
        lines.append(f"{v}: " + " ".join(ccw))
    return "\n".join(lines) + "\n"


def sort_key(label):
    return (label[0], int(label[1:]))


def faces(emb):
    seen, out = set(), []
    for u, v in emb.edges():
        if (u, v) not in seen:
            out.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return out


def radial_66():
    g = s_graph(6, 6)
    ok, emb = nx.check_planarity(g)
    r = nx.Graph()
    for j, f in enumerate(faces(emb), start=1):
        for v in f:
            r.add_edge(v, f"f{j}")
    return r


def g_family(last):
    s = s_graph(4, 4)
    # v_i of G_6 in terms of the S(4,4) labels above
    names = ["v4", "v3", "v2", "w1", "v1", "w2"]
    g = nx.relabel_nodes(s, {old: f"v{i}" for i, old in enumerate(names, start=1)})
    out = {}
    for p in range(6, last):
        a, b, c, d = (f"v{i}" for i in (p - 2, p - 1, p, p + 1))
        g.remove_edge(a, b)
        g.add_edges_from([(a, d), (b, d), (c, d)])
        out[p + 1] = g.copy()
    return out


if __name__ == "__main__":
    import pathlib

    here = pathlib.Path(__file__).parent
    (here / "radial_66.txt").write_text(rotation_text(radial_66()))
    for p, g in g_family(9).items():
        (here / f"g{p}.txt").write_text(rotation_text(g))
