//! Transforms on membership bitmaps indexed by subsets of `0..n`.
//!
//! Bit `i` of the bitmap says whether the subset with bit vector `i` belongs
//! to the family. Bitmaps have `max(1, 2ⁿ/64)` words; for `n < 6` only the
//! low `2ⁿ` bits of the single word are used.

/// `MASKS[j]` has bit `i` set iff bit `j` of `i` is clear.
const MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

pub(crate) fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

/// Mask of the valid bits in the last word.
pub(crate) fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// Adds every superset of every member.
pub(crate) fn up_closure(bits: &mut [u64], n: usize) {
    for j in 0..n {
        if j < 6 {
            let (m, s) = (MASKS[j], 1 << j);
            for w in bits.iter_mut() {
                *w |= (*w & m) << s;
            }
        } else {
            let stride = 1 << (j - 6);
            for k in 0..bits.len() {
                if k & stride == 0 {
                    bits[k | stride] |= bits[k];
                }
            }
        }
    }
}

/// Adds every subset of every member.
pub(crate) fn down_closure(bits: &mut [u64], n: usize) {
    for j in 0..n {
        if j < 6 {
            let (m, s) = (MASKS[j], 1 << j);
            for w in bits.iter_mut() {
                *w |= (*w >> s) & m;
            }
        } else {
            let stride = 1 << (j - 6);
            for k in 0..bits.len() {
                if k & stride == 0 {
                    bits[k] |= bits[k | stride];
                }
            }
        }
    }
}

/// Replaces every member `A` by its complement `S∖A`.
pub(crate) fn complement_members(bits: &mut [u64], n: usize) {
    for j in 0..n {
        if j < 6 {
            let (m, s) = (MASKS[j], 1 << j);
            for w in bits.iter_mut() {
                *w = ((*w & m) << s) | ((*w >> s) & m);
            }
        } else {
            let stride = 1 << (j - 6);
            for k in 0..bits.len() {
                if k & stride == 0 {
                    bits.swap(k, k | stride);
                }
            }
        }
    }
}

/// Complements the family itself: members become non-members.
pub(crate) fn negate(bits: &mut [u64], n: usize) {
    for w in bits.iter_mut() {
        *w = !*w;
    }
    if let Some(last) = bits.last_mut() {
        *last &= tail_mask(n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn get(bits: &[u64], i: usize) -> bool {
        bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Vec<u64> {
        let mut v = vec![0u64; word_count(n)];
        for i in 0..1usize << n {
            if f(i) {
                v[i / 64] |= 1 << (i % 64);
            }
        }
        v
    }

    #[test]
    fn closures_match_naive_definitions() {
        for n in [0usize, 1, 2, 3, 6, 7, 8] {
            let size = 1usize << n;
            // A sparse pseudo-random family.
            let members: Vec<usize> = (0..size).filter(|i| (i.wrapping_mul(2654435761) >> 7) % 5 == 0).collect();
            let base = from_fn(n, |i| members.contains(&i));

            let mut up = base.clone();
            up_closure(&mut up, n);
            assert_eq!(up, from_fn(n, |i| members.iter().any(|&m| m & !i == 0)));

            let mut down = base.clone();
            down_closure(&mut down, n);
            assert_eq!(down, from_fn(n, |i| members.iter().any(|&m| i & !m == 0)));

            let mut comp = base.clone();
            complement_members(&mut comp, n);
            assert_eq!(comp, from_fn(n, |i| members.contains(&(i ^ (size - 1)))));

            let mut neg = base.clone();
            negate(&mut neg, n);
            for i in 0..size {
                assert_eq!(get(&neg, i), !get(&base, i));
            }
        }
    }
}
