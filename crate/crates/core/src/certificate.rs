//! Replayable sequences of braid moves, rotations and cancellations.
//!
//! The text form has one step per line:
//!
//! ```text
//! braid pos=<i> pair=<s>,<t>
//! rotate k=<i> word=<w>
//! cancel pos=<i>
//! ```
//!
//! `braid` rewrites the alternating factor starting with `s` at position `i`,
//! `rotate` moves the first `k` letters of the current word (which must equal
//! `w`) to the end, and `cancel` deletes the equal letters at `i` and `i+1`.
//! Positions are zero-based.

use crate::braid::BraidMove;
use crate::error::{Error, Result};
use crate::matrix::CoxeterMatrix;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Braid(BraidMove),
    Rotate { shift: usize, word: Word },
    Cancel { position: usize },
}

impl Step {
    pub fn apply(&self, matrix: &CoxeterMatrix, current: &mut Word) -> Result<()> {
        match self {
            Step::Braid(mv) => {
                let mut letters = std::mem::take(current).into_letters();
                let res = mv.apply(matrix, &mut letters);
                *current = Word::new(letters);
                res
            }
            Step::Rotate { shift, word } => {
                if current != word {
                    return Err(Error::InvalidCertificate {
                        step: 0,
                        reason: format!(
                            "rotation names `{}` but the current word is `{}`",
                            matrix.format_word(word),
                            matrix.format_word(current)
                        ),
                    });
                }
                if *shift > current.len() {
                    return Err(Error::InvalidCertificate {
                        step: 0,
                        reason: format!("rotation by {shift} exceeds the word length"),
                    });
                }
                *current = current.rotated(*shift);
                Ok(())
            }
            Step::Cancel { position } => {
                let letters = current.letters();
                if position + 1 >= letters.len() || letters[*position] != letters[position + 1] {
                    return Err(Error::InvalidCertificate {
                        step: 0,
                        reason: format!("no repeated letter pair at position {position}"),
                    });
                }
                let mut v = letters.to_vec();
                v.drain(*position..position + 2);
                *current = Word::new(v);
                Ok(())
            }
        }
    }

    pub fn to_text(&self, matrix: &CoxeterMatrix) -> String {
        match self {
            Step::Braid(mv) => format!(
                "braid pos={} pair={},{}",
                mv.position,
                matrix.name(mv.from),
                matrix.name(mv.to)
            ),
            Step::Rotate { shift, word } => {
                format!(
                    "rotate k={} word={}",
                    shift,
                    matrix.format_word_compact(word)
                )
            }
            Step::Cancel { position } => format!("cancel pos={position}"),
        }
    }
}

/// Replays `steps` from `start` and returns the final word.
pub fn replay(matrix: &CoxeterMatrix, start: &Word, steps: &[Step]) -> Result<Word> {
    matrix.check_word(start)?;
    let mut current = start.clone();
    for (i, step) in steps.iter().enumerate() {
        step.apply(matrix, &mut current).map_err(|e| match e {
            Error::InvalidCertificate { reason, .. } => Error::InvalidCertificate {
                step: i + 1,
                reason,
            },
            other => other,
        })?;
    }
    Ok(current)
}

/// A move sequence together with its claimed endpoints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveCertificate {
    pub start: Word,
    pub steps: Vec<Step>,
    pub end: Word,
}

impl MoveCertificate {
    pub fn trivial(word: Word) -> Self {
        MoveCertificate {
            start: word.clone(),
            steps: Vec::new(),
            end: word,
        }
    }

    pub fn replay(&self, matrix: &CoxeterMatrix) -> Result<Word> {
        replay(matrix, &self.start, &self.steps)
    }

    /// Checks that replaying the steps reproduces `end` exactly.
    pub fn verify(&self, matrix: &CoxeterMatrix) -> Result<()> {
        let reached = self.replay(matrix)?;
        if reached != self.end {
            return Err(Error::InvalidCertificate {
                step: self.steps.len(),
                reason: format!(
                    "replay ends at `{}`, certificate claims `{}`",
                    matrix.format_word(&reached),
                    matrix.format_word(&self.end)
                ),
            });
        }
        Ok(())
    }

    /// Appends `next`, which must start where `self` ends.
    pub fn then(mut self, next: MoveCertificate) -> Self {
        debug_assert_eq!(self.end, next.start);
        self.steps.extend(next.steps);
        self.end = next.end;
        self
    }

    pub fn to_text(&self, matrix: &CoxeterMatrix) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_text(matrix));
            out.push('\n');
        }
        out
    }
}

/// Parses the line format produced by [`MoveCertificate::to_text`]. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_steps(matrix: &CoxeterMatrix, text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = n + 1;
        let fail = |col: usize, reason: &str| Error::InvalidCertificate {
            step: lineno,
            reason: format!("line {lineno}, column {col}: {reason}"),
        };
        let column_of = |needle: &str| raw.find(needle).map_or(1, |c| c + 1);
        let mut fields = line.split_whitespace();
        let kind = fields.next().unwrap_or_default();
        let mut get = |key: &str| -> Result<String> {
            let field = fields
                .next()
                .ok_or_else(|| fail(raw.len() + 1, &format!("missing `{key}=`")))?;
            field
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| fail(column_of(field), &format!("expected `{key}=`")))
        };
        let number = |value: &str| -> Result<usize> {
            value
                .parse()
                .map_err(|_| fail(column_of(value), "expected a non-negative integer"))
        };
        let step = match kind {
            "braid" => {
                let position = number(&get("pos")?)?;
                let pair = get("pair")?;
                let (a, b) = pair
                    .split_once(',')
                    .ok_or_else(|| fail(column_of(&pair), "expected `s,t`"))?;
                let lookup = |name: &str| {
                    matrix.generator(name).ok_or_else(|| {
                        fail(column_of(name), &format!("unknown generator `{name}`"))
                    })
                };
                Step::Braid(BraidMove {
                    position,
                    from: lookup(a)?,
                    to: lookup(b)?,
                })
            }
            "rotate" => {
                let shift = number(&get("k")?)?;
                let text = get("word")?;
                let word = matrix
                    .parse_word(&text)
                    .map_err(|e| fail(column_of(&text), &e.to_string()))?;
                Step::Rotate { shift, word }
            }
            "cancel" => Step::Cancel {
                position: number(&get("pos")?)?,
            },
            other => return Err(fail(column_of(other), &format!("unknown step `{other}`"))),
        };
        steps.push(step);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Order;

    #[test]
    fn text_round_trip_and_replay() {
        let m = CoxeterMatrix::from_pairs(&["s", "t"], &[("s", "t", Order::Finite(3))]).unwrap();
        let start = m.parse_word("stss").unwrap();
        let steps = vec![
            Step::Cancel { position: 2 },
            Step::Rotate {
                shift: 1,
                word: m.parse_word("st").unwrap(),
            },
        ];
        let cert = MoveCertificate {
            start,
            steps,
            end: m.parse_word("ts").unwrap(),
        };
        cert.verify(&m).unwrap();
        let text = cert.to_text(&m);
        assert_eq!(text, "cancel pos=2\nrotate k=1 word=st\n");
        assert_eq!(parse_steps(&m, &text).unwrap(), cert.steps);
    }

    #[test]
    fn parse_errors_name_line_and_column() {
        let m = CoxeterMatrix::from_pairs(&["s", "t"], &[]).unwrap();
        let err = parse_steps(&m, "cancel pos=0\nbraid pos=x pair=s,t\n").unwrap_err();
        match err {
            Error::InvalidCertificate { step, reason } => {
                assert_eq!(step, 2);
                assert!(reason.contains("line 2, column"), "{reason}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_steps(&m, "jump pos=1").is_err());
    }

    #[test]
    fn bad_replay_is_rejected() {
        let m = CoxeterMatrix::from_pairs(&["s", "t"], &[]).unwrap();
        let cert = MoveCertificate {
            start: m.parse_word("st").unwrap(),
            steps: vec![Step::Cancel { position: 0 }],
            end: Word::empty(),
        };
        assert!(matches!(
            cert.verify(&m),
            Err(Error::InvalidCertificate { step: 1, .. })
        ));
    }
}
