//! Braid words, closures, slice-Bennequin bounds and identity-word mixing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::surgery::SurgSeq;

/// Maximum strand count for generated braids.
pub const MAX_STRANDS: usize = 8;

/// A braid word: letter `±i` is the generator sigma_i^{±1} crossing strands
/// `i-1` and `i` (0-based), all strands oriented downward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<BraidWord> {
        if !(2..=MAX_STRANDS).contains(&strands) {
            return Err(KnotError::InvalidBraid(format!(
                "strand count {strands} outside 2..={MAX_STRANDS}"
            )));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(KnotError::InvalidBraid(format!(
                    "letter {l} invalid on {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Writhe w(beta) = sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Strand permutation of the word (top position -> bottom position).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    /// True if the closure is a single component (permutation is one cycle).
    pub fn is_knot_closure(&self) -> bool {
        let perm = self.permutation();
        let mut seen = 1;
        let mut at = perm[0];
        while at != 0 {
            at = perm[at];
            seen += 1;
        }
        seen == self.strands
    }

    /// Parse the text format: a `strands=N` header line followed by
    /// comma-separated signed letters (possibly empty).
    pub fn parse(text: &str) -> Result<BraidWord> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| KnotError::InvalidBraid("empty braid text".into()))?;
        let strands: usize = header
            .strip_prefix("strands=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| KnotError::InvalidBraid(format!("bad header {header:?}")))?;
        let mut letters = Vec::new();
        for line in lines {
            for tok in line.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let l: i32 = tok
                    .parse()
                    .map_err(|_| KnotError::InvalidBraid(format!("bad letter {tok:?}")))?;
                letters.push(l);
            }
        }
        BraidWord::new(strands, letters)
    }

    pub fn format(&self) -> String {
        let body: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        format!("strands={}\n{}\n", self.strands, body.join(","))
    }
}

/// Closure of the braid as a knot diagram with one crossing per letter.
pub fn closure(b: &BraidWord) -> Result<Diagram> {
    if !b.is_knot_closure() {
        return Err(KnotError::MultiComponent);
    }
    if b.letters.is_empty() {
        return Ok(Diagram::unknot());
    }
    let mut seq = SurgSeq::new();
    for &l in &b.letters {
        // positive letter: over strand enters from the west (sign +1)
        seq.push_crossing(if l > 0 { 3 } else { 1 });
    }
    // walk the closed-up strands: start at the top of strand 0 and follow the
    // knot through the braid, wrapping bottom to top
    let mut pos = 0usize;
    let mut start_row = 0usize; // letter index to resume from after a wrap
    let total = 2 * b.letters.len();
    let mut emitted = 0;
    while emitted < total {
        for j in start_row..b.letters.len() {
            let l = b.letters[j];
            let i = l.unsigned_abs() as usize;
            let (a, bb) = (i - 1, i);
            if pos != a && pos != bb {
                continue;
            }
            // positive: the left strand goes under; negative: the right one
            let under = if l > 0 { pos == a } else { pos == bb };
            seq.push_pass(j, under);
            emitted += 1;
            pos = if pos == a { bb } else { a };
        }
        start_row = 0; // wrap around the closure back to the top
    }
    let (d, _) = seq.rebuild()?;
    Ok(d)
}

/// Slice-Bennequin bracket around 2u of the closure:
/// |w| - n + 1 <= 2u <= c + 1 - n, with c the crossing count of the closure
/// diagram itself (the word length). The upper bound comes from switching
/// crossings until the braid is descending, so it is only valid against the
/// braid's own diagram; substituting a simplified crossing count would make
/// it false (e.g. any multi-strand word closing to the unknot).
pub fn slice_bennequin(b: &BraidWord) -> Result<(i64, i64)> {
    if !b.is_knot_closure() {
        return Err(KnotError::MultiComponent);
    }
    let n = b.strands as i64;
    let lower = b.writhe().abs() - n + 1;
    let upper = b.letters.len() as i64 + 1 - n;
    Ok((lower, upper))
}

/// Word whose closure is the connected sum of the two closures:
/// b1, then the bridging generator sigma_{k1}, then b2 shifted up by k1.
pub fn braid_connected_sum(b1: &BraidWord, b2: &BraidWord) -> Result<BraidWord> {
    if !b1.is_knot_closure() || !b2.is_knot_closure() {
        return Err(KnotError::MultiComponent);
    }
    let k1 = b1.strands;
    let mut letters = b1.letters.clone();
    letters.push(k1 as i32);
    let shift = k1 as i32;
    letters.extend(b2.letters.iter().map(|&l| if l > 0 { l + shift } else { l - shift }));
    BraidWord::new(k1 + b2.strands, letters)
}

// ---------------------------------------------------------------------------
// Identity-word mixing
// ---------------------------------------------------------------------------

/// Built-in library of braid words equal to the identity: free cancellations,
/// both chiralities of the braid relation, far commutators, and conjugated
/// combinations. All are re-verified at use.
pub fn default_identity_library() -> Vec<BraidWord> {
    let raw: [(usize, &[i32]); 7] = [
        (2, &[1, -1]),
        (2, &[-1, 1]),
        (3, &[1, 2, 1, -2, -1, -2]),
        (3, &[2, 1, 2, -1, -2, -1]),
        (4, &[1, 3, -1, -3]),
        (4, &[-1, -3, 1, 3]),
        (4, &[3, 1, 2, 1, -2, -1, -2, -3]),
    ];
    raw.iter().map(|&(s, ls)| BraidWord::new(s, ls.to_vec()).unwrap()).collect()
}

/// Check that a library word is the identity: trivial permutation, and
/// inserting it into an unknot probe braid leaves the Jones polynomial at 1.
pub fn verify_identity_word(w: &BraidWord) -> Result<()> {
    if w.permutation() != (0..w.strands).collect::<Vec<_>>() {
        return Err(KnotError::NotIdentityWord(format!(
            "word {:?} permutes strands",
            w.letters
        )));
    }
    let mut probe: Vec<i32> = (1..w.strands as i32).collect();
    probe.extend_from_slice(&w.letters);
    let p = BraidWord::new(w.strands, probe)?;
    let d = closure(&p)?;
    let v = crate::invariants::jones(&d)?;
    if !v.is_one() {
        return Err(KnotError::NotIdentityWord(format!(
            "closure probe of {:?} is knotted",
            w.letters
        )));
    }
    Ok(())
}

/// Insert `count` random library identity words at random positions and
/// strand offsets. Closure invariants are unchanged.
pub fn insert_identity_words(
    b: &BraidWord,
    seed: u64,
    count: usize,
    library: &[BraidWord],
) -> Result<BraidWord> {
    if library.is_empty() {
        return Err(KnotError::InvalidBraid("empty identity library".into()));
    }
    for w in library {
        verify_identity_word(w)?;
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut cur = b.clone();
    for _ in 0..count {
        let w = &library[rng.gen_range(0..library.len())];
        if w.strands > cur.strands {
            continue;
        }
        let offset = rng.gen_range(0..=(cur.strands - w.strands)) as i32;
        let at = rng.gen_range(0..=cur.letters.len());
        let shifted: Vec<i32> =
            w.letters.iter().map(|&l| if l > 0 { l + offset } else { l - offset }).collect();
        cur.letters.splice(at..at, shifted);
    }
    BraidWord::new(cur.strands, cur.letters)
}
