//! Expected residual pairs for `S_6`, as generator words.

/// Pairs `(x, y)` with `x` an involution and `y w_0` an involution that no
/// direct rule settles, in canonical duality orientation.
pub const DIRECT_RESIDUALS_S6: [(&str, &str, &str); 13] = [
    ("I", "123454321", "5234231"),
    ("II", "123454321", "3451232"),
    ("III", "123454321", "232432"),
    ("IV", "4523412", "5234231"),
    ("V", "4523412", "3451232"),
    ("VI", "4523412", "232432"),
    ("VII", "4523412", "121454"),
    ("VIII", "4523412", "34541231"),
    ("IX", "345234123", "5234231"),
    ("X", "345234123", "3451232"),
    ("XI", "345234123", "232432"),
    ("XII", "345234123", "121454"),
    ("XIII", "345234123", "34541231"),
];

/// Survivors of the exact vanishing test and the diagram symmetry, written
/// with the shortest elements of the right cell of `x` and the left cell of
/// `y`.
pub const HARD_RESIDUALS_S6: [(&str, &str, &str); 5] = [
    ("XIV", "45231", "232432"),
    ("XV", "45231", "121454"),
    ("XVI", "345231", "1343"),
    ("XVII", "345231", "232432"),
    ("XVIII", "345231", "1214543"),
];
