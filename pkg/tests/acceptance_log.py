"""One result line per acceptance criterion, filled in by test_acceptance."""

RESULTS = {}


def record(number, ok, title, detail=""):
    RESULTS[number] = (ok, title, detail)
    return ok


def lines():
    out = []
    for number in sorted(RESULTS):
        ok, title, detail = RESULTS[number]
        text = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            text += f"  ({detail})"
        out.append(text)
    return out
