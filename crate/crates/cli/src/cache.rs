//! Ideal-lattice cache: a directory of JSON files keyed by a content hash of
//! the ring's operation tables. Corruption is detected by recomputing one
//! seeded-random entry per load and comparing it with the stored one.

use amalg_core::ideal::{all_ideals, ideal_closure, Ideal};
use amalg_core::FiniteRing;
use anyhow::{Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "AMALG_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    label: String,
    order: usize,
    ideals: Vec<CachedIdeal>,
}

#[derive(Serialize, Deserialize)]
struct CachedIdeal {
    gens: Vec<u32>,
    elements: Vec<u32>,
}

pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn at(dir: impl Into<PathBuf>) -> LatticeCache {
        LatticeCache { dir: dir.into() }
    }

    /// Resolves the cache directory: the override variable, then the
    /// platform cache home. None disables caching.
    pub fn open_default() -> Option<LatticeCache> {
        if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
            return Some(LatticeCache::at(dir));
        }
        let base = std::env::var("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .ok()
            .or_else(|| std::env::var("HOME").ok().map(|h| Path::new(&h).join(".cache")))?;
        Some(LatticeCache::at(base.join("amalg").join("lattices")))
    }

    fn path_for(&self, r: &FiniteRing) -> PathBuf {
        let digest = Sha256::digest(r.table_bytes());
        let mut name = String::with_capacity(64);
        for byte in digest {
            name.push_str(&format!("{byte:02x}"));
        }
        self.dir.join(format!("{name}.json"))
    }

    /// Cached lattice if present and not corrupted. Entries are rebuilt as
    /// closures of the stored generators (so they are genuine ideals no
    /// matter what the file says); one seeded-random entry's element set is
    /// compared against the stored bytes to detect corruption.
    fn load(&self, r: &FiniteRing, seed: u64) -> Option<Vec<Ideal>> {
        let text = std::fs::read_to_string(self.path_for(r)).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.order != r.order() || file.ideals.is_empty() {
            return None;
        }
        let mut rebuilt = Vec::with_capacity(file.ideals.len());
        for entry in &file.ideals {
            rebuilt.push(ideal_closure(r, &entry.gens).ok()?);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let probe = rng.gen_range(0..file.ideals.len());
        if rebuilt[probe].elements() != file.ideals[probe].elements.as_slice() {
            return None;
        }
        Some(rebuilt)
    }

    fn store(&self, r: &FiniteRing, lattice: &[Ideal]) -> Result<()> {
        std::fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache dir {}", self.dir.display()))?;
        let file = CacheFile {
            label: r.label().to_string(),
            order: r.order(),
            ideals: lattice
                .iter()
                .map(|i| CachedIdeal {
                    gens: i.generators().to_vec(),
                    elements: i.elements().to_vec(),
                })
                .collect(),
        };
        let path = self.path_for(r);
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, serde_json::to_vec(&file)?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn lattice(&self, r: &FiniteRing, seed: u64) -> Result<Vec<Ideal>> {
        if let Some(found) = self.load(r, seed) {
            return Ok(found);
        }
        let computed = all_ideals(r)?;
        self.store(r, &computed)?;
        Ok(computed)
    }
}

/// Lattice through the default cache when one is available, computed
/// directly otherwise.
pub fn lattice_of(r: &FiniteRing, seed: u64) -> Result<Vec<Ideal>> {
    match LatticeCache::open_default() {
        Some(cache) => cache.lattice(r, seed),
        None => Ok(all_ideals(r)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use amalg_core::make_zmod;

    #[test]
    fn roundtrip_and_corruption_detection() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::at(dir.path());
        let r = make_zmod(12).unwrap();
        let first = cache.lattice(&r, 0).unwrap();
        assert_eq!(first.len(), 6);
        // warm hit
        let second = cache.lattice(&r, 0).unwrap();
        assert_eq!(first, second);

        // corrupt the stored element set of some entry; rebuild must kick in
        let path = cache.path_for(&r);
        let mut file: CacheFile =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        for entry in &mut file.ideals {
            entry.elements = vec![3];
        }
        std::fs::write(&path, serde_json::to_vec(&file).unwrap()).unwrap();
        let third = cache.lattice(&r, 0).unwrap();
        assert_eq!(first, third);
    }

    #[test]
    fn unparseable_cache_files_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::at(dir.path());
        let r = make_zmod(8).unwrap();
        std::fs::create_dir_all(dir.path()).unwrap();
        std::fs::write(cache.path_for(&r), b"not json").unwrap();
        let lattice = cache.lattice(&r, 0).unwrap();
        assert_eq!(lattice.len(), 4);
    }
}
