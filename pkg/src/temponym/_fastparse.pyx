# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled row parser: single C-level scan over the raw file bytes.

Mirrors ``_pyparse.merge_rows`` exactly; the pure version is the reference
for semantics, this one exists for speed on multi-million-row ingests.
"""

from temponym import errors

DEF F_SEEN = 1
DEF M_SEEN = 2


def merge_rows(content, bint strict):
    """Parse ``Name,Sex,Count`` lines and merge F/M rows per name."""
    cdef bytes raw
    try:
        raw = content.encode("ascii")
    except UnicodeEncodeError:
        # Non-ASCII input is legal in lenient user files; take the slow path.
        from temponym import _pyparse
        return _pyparse.merge_rows(content, strict)

    cdef const unsigned char* buf = raw
    cdef Py_ssize_t n = len(raw)
    cdef Py_ssize_t pos = 0, line_start, c1, c2, line_end, i
    cdef Py_ssize_t lineno = 0, skipped = 0
    cdef long long count
    cdef int bad, sex_is_f, mask
    cdef unsigned char ch, sex_ch
    cdef dict counts = {}, seen = {}
    cdef str name
    cdef list entry

    while pos < n:
        line_start = pos
        while pos < n and buf[pos] != 10:  # '\n'
            pos += 1
        line_end = pos
        pos += 1  # past the newline
        lineno += 1
        if line_end == line_start:
            continue

        # locate the two commas
        c1 = -1
        c2 = -1
        i = line_start
        while i < line_end:
            if buf[i] == 44:  # ','
                if c1 < 0:
                    c1 = i
                elif c2 < 0:
                    c2 = i
                else:
                    c2 = -2  # more than two commas
                    break
            i += 1
        if c1 < 0 or c2 < 0 or c2 == -2:
            if strict:
                raise errors.MalformedLine(
                    lineno, raw[line_start:line_end].decode("ascii"), "expected 3 fields"
                )
            skipped += 1
            continue

        # sex field must be exactly one of F/M
        if c2 - c1 != 2 or (buf[c1 + 1] != 70 and buf[c1 + 1] != 77):
            if strict:
                raise errors.InvalidSex(
                    lineno, raw[c1 + 1:c2].decode("ascii")
                )
            skipped += 1
            continue
        sex_is_f = buf[c1 + 1] == 70

        # count field: decimal digits only
        count = 0
        bad = c2 + 1 >= line_end
        i = c2 + 1
        while i < line_end:
            ch = buf[i]
            if ch < 48 or ch > 57:
                bad = 1
                break
            count = count * 10 + (ch - 48)
            i += 1
        if bad:
            if strict:
                raise errors.MalformedLine(
                    lineno, raw[line_start:line_end].decode("ascii"),
                    "count is not an integer",
                )
            skipped += 1
            continue

        if c1 - line_start < 2 or c1 - line_start > 15:
            if strict:
                raise errors.MalformedLine(
                    lineno, raw[line_start:line_end].decode("ascii"),
                    "name length outside 2..15",
                )
            skipped += 1
            continue
        if strict and count < 5:
            raise errors.FloorViolation(
                lineno, raw[line_start:c1].decode("ascii"), count
            )

        name = raw[line_start:c1].decode("ascii")
        mask = seen.get(name, 0)
        if mask & (F_SEEN if sex_is_f else M_SEEN):
            if strict:
                raise errors.DuplicateRow(lineno, name, "F" if sex_is_f else "M")
            skipped += 1
            continue
        seen[name] = mask | (F_SEEN if sex_is_f else M_SEEN)
        entry = counts.setdefault(name, [0, 0])
        entry[0 if sex_is_f else 1] = count

    return {key: (val[0], val[1]) for key, val in counts.items()}, skipped
