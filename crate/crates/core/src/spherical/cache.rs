//! Content-addressed on-disk store for spherical tables.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{Engine, Setup, SphericalTable};
use crate::error::Result;

/// Tables stored as `<dir>/<sha256>.json`, keyed by the group digest and
/// (ξ, π, n, engine).
pub struct SphericalCache {
    dir: PathBuf,
}

impl SphericalCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(SphericalCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(setup: &Setup, engine: Engine) -> String {
        let mut h = Sha256::new();
        h.update(setup.data.digest().as_bytes());
        h.update(
            format!(
                "|{}|{}|{}|{}",
                setup.xi(),
                setup.pi().name(),
                setup.n(),
                engine
            )
            .as_bytes(),
        );
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, setup: &Setup, engine: Engine) -> Result<Option<SphericalTable>> {
        let p = self.path(&Self::key(setup, engine));
        if !p.exists() {
            return Ok(None);
        }
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(p)?)?;
        let mut t = SphericalTable::from_json(&v)?;
        t.rows = setup.rows.iter().map(|r| r.label.clone()).collect();
        t.cols = setup.cols.clone();
        Ok(Some(t))
    }

    pub fn put(&self, setup: &Setup, engine: Engine, table: &SphericalTable) -> Result<()> {
        let p = self.path(&Self::key(setup, engine));
        let tmp = p.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&table.to_json())?)?;
        fs::rename(tmp, p)?;
        Ok(())
    }

    /// Looks up the table, computing and storing it on a miss.
    pub fn get_or_compute(
        &self,
        setup: &Setup,
        engine: Engine,
        compute: impl FnOnce() -> Result<SphericalTable>,
    ) -> Result<SphericalTable> {
        if let Some(t) = self.get(setup, engine)? {
            return Ok(t);
        }
        let t = compute()?;
        self.put(setup, engine, &t)?;
        Ok(t)
    }
}
