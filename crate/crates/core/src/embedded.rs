//! The ℓ=2 generator matrices as typeset, stored sparsely as
//! `(row, col, coefficient, radicand)`.

pub(crate) type Entry = (usize, usize, i64, u64);

pub(crate) const TEN_ELL_2: &[(&str, &[Entry])] = &[
    (
        "L+",
        &[
            (0, 1, -1, 2),
            (1, 2, -1, 2),
            (3, 4, -1, 1),
            (5, 6, -1, 1),
            (7, 8, -1, 2),
            (8, 9, -1, 2),
        ],
    ),
    (
        "a+",
        &[
            (0, 3, 2, 1),
            (1, 4, 1, 2),
            (3, 1, -1, 2),
            (4, 2, -2, 1),
            (5, 8, -1, 2),
            (6, 9, -2, 1),
            (7, 5, 2, 1),
            (8, 6, 1, 2),
        ],
    ),
    (
        "at+",
        &[
            (0, 5, 2, 1),
            (1, 6, 1, 2),
            (3, 8, 1, 2),
            (4, 9, 2, 1),
            (5, 1, 1, 2),
            (6, 2, 2, 1),
            (7, 3, 2, 1),
            (8, 4, 1, 2),
        ],
    ),
    (
        "Lt+",
        &[
            (0, 8, -1, 2),
            (1, 9, -1, 2),
            (3, 6, 1, 1),
            (5, 4, 1, 1),
            (7, 1, -1, 2),
            (8, 2, -1, 2),
        ],
    ),
    (
        "R",
        &[
            (0, 0, 2, 1),
            (2, 2, -2, 1),
            (3, 3, 1, 1),
            (4, 4, -1, 1),
            (5, 5, 1, 1),
            (6, 6, -1, 1),
            (7, 7, 2, 1),
            (9, 9, -2, 1),
        ],
    ),
    (
        "Rt",
        &[
            (0, 7, 2, 1),
            (2, 9, -2, 1),
            (3, 5, -1, 1),
            (4, 6, 1, 1),
            (5, 3, -1, 1),
            (6, 4, 1, 1),
            (7, 0, 2, 1),
            (9, 2, -2, 1),
        ],
    ),
    (
        "L-",
        &[
            (1, 0, 1, 2),
            (2, 1, 1, 2),
            (4, 3, 1, 1),
            (6, 5, 1, 1),
            (8, 7, 1, 2),
            (9, 8, 1, 2),
        ],
    ),
    (
        "a-",
        &[
            (1, 3, 1, 2),
            (2, 4, 2, 1),
            (3, 0, 2, 1),
            (4, 1, 1, 2),
            (5, 7, 2, 1),
            (6, 8, 1, 2),
            (8, 5, 1, 2),
            (9, 6, 2, 1),
        ],
    ),
    (
        "at-",
        &[
            (1, 5, -1, 2),
            (2, 6, -2, 1),
            (3, 7, 2, 1),
            (4, 8, 1, 2),
            (5, 0, 2, 1),
            (6, 1, 1, 2),
            (8, 3, -1, 2),
            (9, 4, -2, 1),
        ],
    ),
    (
        "Lt-",
        &[
            (1, 7, 1, 2),
            (2, 8, 1, 2),
            (4, 5, -1, 1),
            (6, 3, -1, 1),
            (8, 0, 1, 2),
            (9, 1, 1, 2),
        ],
    ),
];

pub(crate) const EIGHT_ELL_2: &[(&str, &[Entry])] = &[
    (
        "L+",
        &[(0, 1, -1, 2), (1, 2, -1, 2), (3, 4, -1, 1), (5, 6, -1, 1)],
    ),
    (
        "a+",
        &[
            (0, 3, 2, 1),
            (1, 4, 1, 2),
            (3, 1, -1, 2),
            (4, 2, -2, 1),
            (5, 7, 1, 2),
            (7, 6, -1, 2),
        ],
    ),
    (
        "at+",
        &[
            (0, 5, 2, 1),
            (1, 6, 1, 2),
            (3, 7, 1, 2),
            (5, 1, 1, 2),
            (6, 2, 2, 1),
            (7, 4, 1, 2),
        ],
    ),
    (
        "R",
        &[
            (0, 0, 2, 1),
            (2, 2, -2, 1),
            (3, 3, 1, 1),
            (4, 4, -1, 1),
            (5, 5, 1, 1),
            (6, 6, -1, 1),
        ],
    ),
    (
        "Rt",
        &[(3, 5, 1, 1), (4, 6, 1, 1), (5, 3, -1, 1), (6, 4, -1, 1)],
    ),
    (
        "L-",
        &[(1, 0, 1, 2), (2, 1, 1, 2), (4, 3, 1, 1), (6, 5, 1, 1)],
    ),
    (
        "a-",
        &[
            (1, 3, 1, 2),
            (2, 4, 2, 1),
            (3, 0, 2, 1),
            (4, 1, 1, 2),
            (6, 7, 1, 2),
            (7, 5, 1, 2),
        ],
    ),
    (
        "at-",
        &[
            (1, 5, -1, 2),
            (2, 6, -2, 1),
            (4, 7, -1, 2),
            (5, 0, 2, 1),
            (6, 1, 1, 2),
            (7, 3, 1, 2),
        ],
    ),
];
