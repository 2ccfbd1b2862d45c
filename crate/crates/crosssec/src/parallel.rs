//! Multi-threaded oracle scans and sweeps. Results do not depend on the
//! number of threads: work is split into fixed chunks and merged in order.

use rayon::prelude::*;

use crosssec_core::analysis::{sweep_row, SweepRecord};
use crosssec_core::solver::{GridBest, OracleGrid, OracleResult};
use crosssec_core::RootFindConfig;

use crate::error::CliError;

pub const THREADS_ENV: &str = "CROSSSEC_THREADS";

/// Grid points per work item.
const CHUNK: usize = 1 << 14;

/// Thread cap from `CROSSSEC_THREADS`, if set.
pub fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::input(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// Runs `f` on a pool of at most `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::input(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn oracle(
    s_c: f64,
    l: f64,
    grid_points: usize,
    cfg: &RootFindConfig,
    threads: Option<usize>,
) -> Result<OracleResult, CliError> {
    let grid = OracleGrid::new(s_c, l, grid_points)?;
    let chunks = grid_points.div_ceil(CHUNK);
    let partial: Vec<Option<GridBest>> = with_threads(threads, || {
        (0..chunks)
            .into_par_iter()
            .map(|k| grid.scan(k * CHUNK..((k + 1) * CHUNK).min(grid_points)))
            .collect()
    })?;
    let best = partial.into_iter().flatten().reduce(GridBest::merge).expect("grid has at least 1000 points");
    Ok(grid.finish(best, cfg)?)
}

/// Rows in `S_c`-major order, identical to the sequential sweep.
pub fn sweep(
    perimeter: f64,
    s_c: &[f64],
    l: &[f64],
    cfg: &RootFindConfig,
    threads: Option<usize>,
) -> Result<Vec<SweepRecord>, CliError> {
    if !(perimeter.is_finite() && perimeter > 0.0) {
        return Err(CliError::input("sweep perimeter must be positive"));
    }
    if s_c.is_empty() || l.is_empty() {
        return Err(CliError::input("sweep ranges must be non-empty"));
    }
    let pairs: Vec<(f64, f64)> = s_c.iter().flat_map(|&a| l.iter().map(move |&b| (a, b))).collect();
    with_threads(threads, || pairs.par_iter().map(|&(a, b)| sweep_row(perimeter, a, b, cfg)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crosssec_core::analysis::sweep_constant_perimeter;
    use crosssec_core::solver::area_max_oracle;

    #[test]
    fn oracle_matches_sequential_scan() {
        let cfg = RootFindConfig::default();
        let seq = area_max_oracle(152.0, 76.2, 100_003, &cfg).unwrap();
        for t in [Some(1), Some(3), None] {
            assert_eq!(oracle(152.0, 76.2, 100_003, &cfg, t).unwrap(), seq);
        }
    }

    #[test]
    fn sweep_matches_sequential() {
        let cfg = RootFindConfig::default();
        let (s_c, l) = ([100.0, 127.0, 152.0, 280.0], [0.0, 50.8, 76.2]);
        let seq = sweep_constant_perimeter(558.0, &s_c, &l, &cfg).unwrap();
        assert_eq!(sweep(558.0, &s_c, &l, &cfg, Some(2)).unwrap(), seq);
        assert!(sweep(558.0, &[], &l, &cfg, None).is_err());
    }
}
