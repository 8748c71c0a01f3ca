"""Pure-Python Schensted bumping over integer (offset, position) pairs.

The pair order is: larger offset first, and among equal offsets larger
position first.  Encoding each pair as the key (-offset, -position) turns
that into the ordinary tuple order, so a row of keys is kept sorted
ascending and a new key bumps the leftmost strictly greater entry.
"""

from bisect import bisect_right


def insert_one(key_rows, idx_rows, key, idx):
    """Insert one (key, idx) pair, mutating the row lists in place."""
    r = 0
    while True:
        if r == len(key_rows):
            key_rows.append([key])
            idx_rows.append([idx])
            return
        row = key_rows[r]
        i = bisect_right(row, key)
        if i == len(row):
            row.append(key)
            idx_rows[r].append(idx)
            return
        key, row[i] = row[i], key
        idx, idx_rows[r][i] = idx_rows[r][i], idx
        r += 1


def insert_sequence(offsets, positions):
    """Insert all pairs in order; return rows of indices into the input."""
    key_rows = []
    idx_rows = []
    for t in range(len(offsets)):
        insert_one(key_rows, idx_rows, (-offsets[t], -positions[t]), t)
    return idx_rows
