//! Order-preserving map over a slice: rayon with the `parallel` feature,
//! a plain iterator otherwise. Results come back in input order either way.

#[cfg(feature = "parallel")]
pub fn par_map<T, R, F>(items: &[T], threads: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match threads {
        Some(1) => items.iter().map(f).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.iter().map(f).collect(),
        },
        None => items.par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, R, F>(items: &[T], _threads: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Size the global pool used when no explicit thread count is passed.
/// Only the first call has an effect.
#[cfg(feature = "parallel")]
pub fn set_global_threads(n: usize) {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn set_global_threads(_n: usize) {}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let v: Vec<u64> = (0..1000).collect();
        let seq: Vec<u64> = v.iter().map(|x| x * x).collect();
        assert_eq!(par_map(&v, None, |x| x * x), seq);
        assert_eq!(par_map(&v, Some(3), |x| x * x), seq);
        assert_eq!(par_map(&v, Some(1), |x| x * x), seq);
    }
}
