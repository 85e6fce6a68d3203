//! Compile-time blade multiplication table.
//!
//! A blade is a bitmask over `{γ_0, γ_1, γ_2, γ_3}`; bit μ set means γ_μ is a
//! factor, and factors are stored in ascending index order. The product of
//! two blades is the blade `a ^ b` times a sign from reordering plus the
//! metric on repeated factors.

/// Diagonal of η.
pub const METRIC: [i8; 4] = [1, -1, -1, -1];

pub const GRADE: [usize; 16] = {
    let mut g = [0usize; 16];
    let mut b = 0;
    while b < 16 {
        g[b] = (b as u32).count_ones() as usize;
        b += 1;
    }
    g
};

const fn blade_sign(a: usize, b: usize) -> i8 {
    let mut s: i8 = 1;
    let mut i = 0;
    while i < 4 {
        if (b >> i) & 1 == 1 && ((a >> (i + 1)).count_ones() % 2 == 1) {
            s = -s;
        }
        i += 1;
    }
    let common = a & b;
    let mut i = 0;
    while i < 4 {
        if (common >> i) & 1 == 1 {
            s *= METRIC[i];
        }
        i += 1;
    }
    s
}

/// `SIGN[a][b]` is the sign of blade `a` times blade `b`; the result blade is `a ^ b`.
pub const SIGN: [[i8; 16]; 16] = {
    let mut t = [[0i8; 16]; 16];
    let mut a = 0;
    while a < 16 {
        let mut b = 0;
        while b < 16 {
            t[a][b] = blade_sign(a, b);
            b += 1;
        }
        a += 1;
    }
    t
};

/// Sign picked up by a blade under reversion: (−1)^{r(r−1)/2}.
pub const REVERSE_SIGN: [i8; 16] = {
    let mut t = [0i8; 16];
    let mut b = 0;
    while b < 16 {
        t[b] = if GRADE[b] % 4 < 2 { 1 } else { -1 };
        b += 1;
    }
    t
};

/// Blades in display order: by grade, then lexicographic in the indices.
pub const DISPLAY_ORDER: [usize; 16] = [0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 7, 11, 13, 14, 15];

pub const PSEUDOSCALAR: usize = 0b1111;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectors_square_to_metric() {
        for mu in 0..4 {
            assert_eq!(SIGN[1 << mu][1 << mu], METRIC[mu]);
        }
    }

    #[test]
    fn orthogonal_vectors_anticommute() {
        for mu in 0..4 {
            for nu in 0..4 {
                if mu != nu {
                    assert_eq!(SIGN[1 << mu][1 << nu], -SIGN[1 << nu][1 << mu]);
                }
            }
        }
    }

    #[test]
    fn reverse_signs_by_grade() {
        let expect = [1, 1, -1, -1, 1];
        for b in 0..16 {
            assert_eq!(REVERSE_SIGN[b], expect[GRADE[b]]);
        }
    }

    #[test]
    fn table_is_associative() {
        for a in 0..16 {
            for b in 0..16 {
                for c in 0..16 {
                    let left = SIGN[a][b] * SIGN[a ^ b][c];
                    let right = SIGN[b][c] * SIGN[a][b ^ c];
                    assert_eq!(left, right, "{a} {b} {c}");
                }
            }
        }
    }
}
