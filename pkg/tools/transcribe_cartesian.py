"""Convert the LaTeX of the Cartesian higher integrals into the text tables
of ``ttwlab.cartesian_data``.

Reads the document markdown, strips layout, walks the anticommutator
groups \\{ D, f \\} and splits every coefficient into additive terms written
in the same plain syntax as ``ttwlab.printed`` (A = alpha, B = beta,
w = omega).  A closing \\} with no open group means the previous group was
closed too early by the typesetting; the terms seen since then are moved
back into it.  The operator-polynomial head of each integral is written by
hand in the package and skipped here.

Usage: python3 tools/transcribe_cartesian.py SOURCE.md > src/ttwlab/cartesian_data.py
"""

import re
import sys

# (start marker, prose that follows the block, text that ends the
# operator-polynomial head)
SOURCES = {
    1: (r"\mathcal{Y}_2 = ", "The algebraic form", r"\omega^2 x^2"),
    2: (r"\mathcal{Y}_4 = &", "denotes an anticommutator", r"\omega^2 y^2)^2"),
    3: (r"\mathcal{Y}_6 = &", "The algebraic form", "\\\\"),
    4: (r"\mathcal{Y}_8 = &", "The algebraic form", "\\\\"),
}
# display labels: "\quad (n)", "\tag{..}" or a bare "(X1)" line
LABEL = re.compile(r"\\quad \(\d+\)|\\tag\{\w+\}|\([A-Z]\d\)|where \$\\\{, \\\}\$")


def extract(text, start, end, head_end):
    i = text.index(start)
    j = text.index(end, i)
    body = LABEL.sub("", text[i:j])
    return body.split(head_end, 1)[1]


def clean(s):
    for a, b in [
        ("$$", " "), (r"\begin{aligned}", " "), (r"\end{aligned}", " "),
        (r"\left\{", r"\{"), (r"\right\}", r"\}"), (r"\left.", " "), (r"\right.", " "),
        (r"\left(", "("), (r"\right)", ")"), ("&", " "), ("\\\\", " "), (r"\quad", " "),
    ]:
        s = s.replace(a, b)
    return re.sub(r"\s+", " ", s).strip().rstrip(".,").strip()


_DERIV = re.compile(r"\s*(\\partial_x(?:\^\{?(\d+)\}?)?)?\s*(\\partial_y(?:\^\{?(\d+)\}?)?)?\s*,?")


def to_plain(term):
    """LaTeX term -> plain text."""
    out = []
    i = 0
    while i < len(term):
        if term.startswith(r"\frac", i):
            num, i = _group(term, i + 5)
            den, i = _group(term, i)
            out.append(f"(({to_plain(num)})/({to_plain(den)}))")
            continue
        if term.startswith("^{", i):
            g, i = _group(term, i + 1)
            out.append(f"^({to_plain(g)})")
            continue
        out.append(term[i])
        i += 1
    s = "".join(out)
    s = s.replace(r"\alpha", " A ").replace(r"\beta", " B ").replace(r"\omega", " w ")
    return re.sub(r"\s+", " ", s).strip()


def _group(s, i):
    while s[i] == " ":
        i += 1
    assert s[i] == "{", s[i:i + 30]
    depth = 0
    for j in range(i, len(s)):
        if s[j] == "{":
            depth += 1
        elif s[j] == "}":
            depth -= 1
            if depth == 0:
                return s[i + 1:j], j + 1
    raise ValueError("unbalanced group")


def split_blocks(s):
    blocks = []            # [kind, (m, n), [terms]]
    potential = ["V", (0, 0), []]
    current = None
    last = None
    pending = []
    buf = []
    depth = 0

    def flush():
        t = "".join(buf).strip()
        buf.clear()
        if not t or t in "+-":
            return
        if current is not None:
            current[2].append(t)
        else:
            potential[2].append(t)
            pending.append(t)

    i = 0
    while i < len(s):
        if s.startswith(r"\{", i) and depth == 0:
            flush()
            m = _DERIV.match(s, i + 2)
            mx = (1 if m.group(1) else 0) if not m.group(2) else int(m.group(2))
            ny = (1 if m.group(3) else 0) if not m.group(4) else int(m.group(4))
            current = ["anti", (mx, ny), []]
            blocks.append(current)
            pending.clear()
            i = m.end()
            continue
        if s.startswith(r"\}", i) and depth == 0:
            flush()
            if current is not None:
                last, current = current, None
            else:
                # the previous group was closed early: pull the stray terms back
                for t in pending:
                    potential[2].remove(t)
                    last[2].append(t)
            pending.clear()
            i += 2
            continue
        c = s[i]
        if c in "{(":
            depth += 1
        elif c in "})":
            depth -= 1
        if c in "+-" and depth == 0:
            flush()
        buf.append(c)
        i += 1
    flush()
    return blocks + [potential]


def main(path):
    text = open(path).read()
    print('"""Cartesian higher integrals for k = 1..4 as printed.')
    print()
    print("Generated from the typeset source by tools/transcribe_cartesian.py; the")
    print("operator-polynomial heads are in :mod:`ttwlab.cartesian`.  Each table is a")
    print("list of (kind, (m, n), terms): kind 'anti' is the anticommutator of")
    print("dx^m dy^n with the sum of the terms, kind 'V' a multiplication operator.")
    print("A = alpha, B = beta, w = omega.")
    print('"""')
    for k, (start, end, head_end) in SOURCES.items():
        blocks = split_blocks(clean(extract(text, start, end, head_end)))
        print()
        print(f"Y{2 * k}_BLOCKS = [")
        for kind, mn, terms in blocks:
            if not terms:
                continue
            print(f"    ({kind!r}, {mn}, [")
            for t in terms:
                print(f"        {to_plain(t)!r},")
            print("    ]),")
        print("]")


if __name__ == "__main__":
    main(sys.argv[1])
