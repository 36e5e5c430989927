//! Restartable solution streams and replay-based deduplication.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// One run over a stream's solutions.
pub type Solutions = Box<dyn Iterator<Item = Result<VertexSet>> + Send>;

/// A deterministic factory of identical, independently replayable runs.
///
/// Every call to [`SolutionStream::start`] yields a fresh cursor producing the
/// same sequence as every other cursor of the same stream.
#[derive(Clone)]
pub struct SolutionStream {
    factory: Arc<dyn Fn() -> Solutions + Send + Sync>,
}

impl SolutionStream {
    pub fn new<F>(factory: F) -> Self
    where
        F: Fn() -> Solutions + Send + Sync + 'static,
    {
        SolutionStream {
            factory: Arc::new(factory),
        }
    }

    /// Stream over a fixed list of sets.
    pub fn from_sets(sets: Vec<VertexSet>) -> Self {
        let sets = Arc::new(sets);
        SolutionStream::new(move || {
            let sets = Arc::clone(&sets);
            Box::new((0..sets.len()).map(move |k| Ok(sets[k].clone())))
        })
    }

    pub fn single(set: VertexSet) -> Self {
        SolutionStream::from_sets(vec![set])
    }

    pub fn start(&self) -> Solutions {
        (self.factory)()
    }

    /// Runs the stream to exhaustion and collects its output in order.
    pub fn collect_vec(&self) -> Result<Vec<VertexSet>> {
        self.start().collect()
    }

    pub fn count(&self) -> Result<usize> {
        let mut k = 0;
        for item in self.start() {
            item?;
            k += 1;
        }
        Ok(k)
    }

    /// First-occurrence deduplication, see [`dedup`].
    pub fn dedup(self) -> SolutionStream {
        dedup(self)
    }
}

impl fmt::Debug for SolutionStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SolutionStream")
    }
}

/// Removes repetitions from a deterministic stream without remembering any
/// solution.
///
/// Each time the primary run produces its `k`-th output `y`, a second run of
/// the same stream is replayed until it first produces `y`. The output is
/// kept iff that first occurrence is at position `k`. At most two cursors are
/// alive at any time; a replay that disagrees with the primary run at
/// position `k` is reported as [`Error::Nondeterministic`].
pub fn dedup(inner: SolutionStream) -> SolutionStream {
    SolutionStream::new(move || {
        Box::new(Dedup {
            primary: inner.start(),
            replay_source: inner.clone(),
            emitted: 0,
            failed: false,
        })
    })
}

struct Dedup {
    primary: Solutions,
    replay_source: SolutionStream,
    // outputs of the primary run seen so far
    emitted: usize,
    failed: bool,
}

impl Dedup {
    fn is_first_occurrence(&self, y: &VertexSet, position: usize) -> Result<bool> {
        let mut replay = self.replay_source.start();
        for j in 0..=position {
            match replay.next() {
                Some(Ok(x)) => {
                    if &x == y {
                        return Ok(j == position);
                    }
                    if j == position {
                        break;
                    }
                }
                Some(Err(e)) => return Err(e),
                None => break,
            }
        }
        Err(Error::Nondeterministic { position })
    }
}

impl Iterator for Dedup {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            let y = match self.primary.next()? {
                Ok(y) => y,
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e));
                }
            };
            let position = self.emitted;
            self.emitted += 1;
            match self.is_first_occurrence(&y, position) {
                Ok(true) => return Some(Ok(y)),
                Ok(false) => continue,
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e));
                }
            }
        }
    }
}
