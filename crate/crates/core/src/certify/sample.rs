//! Exhaustive balls and seeded random words.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::groups::{free_reduce, FreeWord};

/// Every reduced word of letter length `<= radius` over `alphabet` and its
/// inverses, shortest first, in a fixed order.
pub fn ball(alphabet: &[char], radius: usize) -> Vec<FreeWord> {
    let steps: Vec<(char, i64)> = alphabet.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect();
    let mut out = vec![FreeWord::identity()];
    let mut shell: Vec<Vec<(char, i64)>> = vec![Vec::new()];
    for _ in 0..radius {
        let mut next = Vec::with_capacity(shell.len() * (steps.len() - 1).max(1));
        for w in &shell {
            for &(g, e) in &steps {
                if w.last() == Some(&(g, -e)) {
                    continue;
                }
                let mut v = w.clone();
                v.push((g, e));
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| free_reduce(v.iter().copied())));
        shell = next;
    }
    out
}

/// A uniformly random reduced word of exactly `len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &[char], len: usize) -> FreeWord {
    let steps: Vec<(char, i64)> = alphabet.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect();
    let mut letters: Vec<(char, i64)> = Vec::with_capacity(len);
    while letters.len() < len {
        let &(g, e) = steps.choose(rng).expect("nonempty alphabet");
        if letters.last() == Some(&(g, -e)) {
            continue;
        }
        letters.push((g, e));
    }
    free_reduce(letters)
}

/// Random reduced word with length uniform in `lo..=hi`.
pub fn random_word_between(rng: &mut ChaCha8Rng, alphabet: &[char], lo: usize, hi: usize) -> FreeWord {
    let len = rng.gen_range(lo..=hi);
    random_word(rng, alphabet, len)
}

/// Splits `w` after its first `k` letters.
pub fn split_at_letter(w: &FreeWord, k: usize) -> (FreeWord, FreeWord) {
    let letters: Vec<(char, i64)> = w.letters().collect();
    let k = k.min(letters.len());
    (free_reduce(letters[..k].iter().copied()), free_reduce(letters[k..].iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn ball_sizes() {
        // 1 + 4 (1 + 3 + ... + 3^(r-1)) reduced words in a free group of rank 2
        assert_eq!(ball(&['a', 'b'], 5).len(), 1 + 4 * (1 + 3 + 9 + 27 + 81));
        assert_eq!(ball(&['x', 'y', 'z'], 2).len(), 1 + 6 + 30);
        let b = ball(&['a', 'b'], 3);
        let mut dedup = b.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), b.len());
    }

    #[test]
    fn random_words_are_reduced_and_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for len in 0..20 {
            let w = random_word(&mut r1, &['a', 'b'], len);
            assert_eq!(w.letter_len() as usize, len);
            assert_eq!(w, random_word(&mut r2, &['a', 'b'], len));
        }
    }

    #[test]
    fn split_reassembles() {
        let w = FreeWord::parse("a^3 b^-2 a").unwrap();
        for k in 0..=7 {
            let (u, v) = split_at_letter(&w, k);
            assert_eq!(u.mul(&v), w);
            assert_eq!(u.letter_len() as usize, k.min(6));
        }
    }
}
