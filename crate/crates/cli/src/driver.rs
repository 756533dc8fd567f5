//! Runs prepared claims and searches on a pool of worker threads.
//!
//! Workers take unit indices from a shared counter; the calling thread
//! collects their partial results and merges them strictly in unit order,
//! so the merged output does not depend on scheduling. Only the merged
//! prefix is ever checkpointed.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use flt_lab_core::claims::{ClaimOutcome, ClaimParams, ClaimRun};
use flt_lab_core::diophantine::{partition, Partial, RangeSearch, SearchResult};

use crate::checkpoint::Checkpoint;
use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct DriveOptions {
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many units in this invocation (resumable).
    pub max_units: Option<u64>,
    pub checkpoint_interval: Duration,
    pub progress: bool,
}

impl Default for DriveOptions {
    fn default() -> Self {
        DriveOptions {
            jobs: 1,
            checkpoint: None,
            max_units: None,
            checkpoint_interval: Duration::from_secs(1),
            progress: false,
        }
    }
}

#[derive(Debug)]
pub enum Driven {
    Complete(ClaimOutcome),
    Interrupted { completed: u64, total: u64 },
}

struct Progress {
    enabled: bool,
    label: String,
    last: Instant,
}

impl Progress {
    fn tick(&mut self, done: u64, total: u64, force: bool) {
        if self.enabled && (force || self.last.elapsed() >= Duration::from_millis(500)) {
            let _ = writeln!(std::io::stderr(), "{}: {done}/{total} units", self.label);
            self.last = Instant::now();
        }
    }
}

pub fn drive_claim(params: &ClaimParams, opts: &DriveOptions) -> Result<Driven, CliError> {
    let run = ClaimRun::prepare(params)?;
    let total = run.unit_count();
    let (mut acc, mut prefix, prior) = match &opts.checkpoint {
        Some(path) if path.exists() => {
            let cp = Checkpoint::load(path)?;
            cp.check_matches(params, total, path)?;
            let acc = Partial { records: cp.partial_solutions, candidates: cp.candidates, filtered: cp.filtered };
            (acc, cp.completed_prefix, cp.elapsed_seconds)
        }
        _ => (Partial::default(), 0, 0.0),
    };
    let end = opts.max_units.map_or(total, |m| prefix.saturating_add(m).min(total));
    let started = Instant::now();
    let save = |acc: &Partial, prefix: u64| -> Result<(), CliError> {
        match &opts.checkpoint {
            Some(path) => Checkpoint::new(params, total, prefix, acc, prior + started.elapsed().as_secs_f64()).store(path),
            None => Ok(()),
        }
    };
    let mut progress = Progress { enabled: opts.progress, label: params.id().to_string(), last: Instant::now() };

    let mut failure = None;
    if prefix < end {
        let next = AtomicU64::new(prefix);
        let stop = AtomicBool::new(false);
        let workers = (opts.jobs.max(1) as u64).min(end - prefix);
        let mut last_save = Instant::now();
        thread::scope(|scope| {
            let (tx, rx) = mpsc::channel();
            for _ in 0..workers {
                let tx = tx.clone();
                let (run, next, stop) = (&run, &next, &stop);
                scope.spawn(move || {
                    while !stop.load(Ordering::Relaxed) {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= end {
                            break;
                        }
                        let r = run.run_units(i..i + 1);
                        if r.is_err() {
                            stop.store(true, Ordering::Relaxed);
                        }
                        if tx.send((i, r)).is_err() {
                            break;
                        }
                    }
                });
            }
            drop(tx);
            let mut pending = BTreeMap::new();
            for (i, r) in rx {
                match r {
                    Ok(p) => {
                        pending.insert(i, p);
                    }
                    Err(e) => {
                        failure.get_or_insert(CliError::from(e));
                        stop.store(true, Ordering::Relaxed);
                    }
                }
                let before = prefix;
                while let Some(p) = pending.remove(&prefix) {
                    acc.merge(p);
                    prefix += 1;
                }
                if prefix > before && last_save.elapsed() >= opts.checkpoint_interval {
                    if let Err(e) = save(&acc, prefix) {
                        failure.get_or_insert(e);
                        stop.store(true, Ordering::Relaxed);
                    }
                    last_save = Instant::now();
                }
                progress.tick(prefix, total, false);
            }
        });
    }
    save(&acc, prefix)?;
    if let Some(e) = failure {
        return Err(e);
    }
    progress.tick(prefix, total, true);
    if prefix < total {
        return Ok(Driven::Interrupted { completed: prefix, total });
    }
    Ok(Driven::Complete(run.finish(acc)?))
}

/// `search.run()` computed over `jobs` slices on separate threads.
pub fn run_search(search: &dyn RangeSearch, jobs: usize) -> Result<SearchResult, CliError> {
    let ranges = partition(search.outer_len(), jobs.max(1));
    let parts: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = ranges.into_iter().map(|r| scope.spawn(move || search.run_range(r))).collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    });
    let mut acc = Partial::default();
    for p in parts {
        acc.merge(p?);
    }
    Ok(acc.finish())
}
