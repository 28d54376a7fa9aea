//! Size caps for the potentially explosive computations.
//!
//! Operations that enumerate subsets, permutations or large matrices take a
//! [`Limits`] and fail loudly with [`crate::Error::CapExceeded`] instead of
//! looping forever.  The CLI can override every cap from a config file.

/// Caps on computation sizes.  `Default` gives the documented desk-scale
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Max generator count for algorithms enumerating all `2^r` subsets
    /// (the Taylor complex and brute-force oracles).
    pub subset_generators: usize,
    /// Max facet count for the exhaustive shellability search.
    pub shelling_facets: usize,
    /// Max column count for a single homology/rank computation.
    pub homology_columns: usize,
    /// Max weighted degree of an S-pair lcm in Buchberger.
    pub gb_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subset_generators: 20,
            shelling_facets: 12,
            homology_columns: 5000,
            gb_degree: 200,
        }
    }
}

impl Limits {
    /// Parse overrides in `key=value` lines (unknown keys are errors).
    pub fn apply_config(&mut self, text: &str) -> crate::Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(crate::Error::parse(idx + 1, "expected key=value"));
            };
            let (key, value) = (key.trim(), value.trim());
            let parsed: u64 = value
                .parse()
                .map_err(|_| crate::Error::parse(idx + 1, format!("bad number {value:?}")))?;
            match key {
                "subset_generators" => self.subset_generators = parsed as usize,
                "shelling_facets" => self.shelling_facets = parsed as usize,
                "homology_columns" => self.homology_columns = parsed as usize,
                "gb_degree" => self.gb_degree = parsed as u32,
                other => {
                    return Err(crate::Error::parse(
                        idx + 1,
                        format!("unknown limit {other:?}"),
                    ))
                }
            }
        }
        Ok(())
    }
}
