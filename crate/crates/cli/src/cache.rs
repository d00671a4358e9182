use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use jw_core::freelie::{lyndon_basis, seed_lyndon_basis, FreeLieError, Word};
use log::{debug, info, warn};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Basis(#[from] FreeLieError),
}

/// On-disk form of one Lyndon basis: words as lists of letter indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub n: usize,
    pub k: usize,
    pub words: Vec<Vec<u8>>,
}

impl CacheEntry {
    pub fn new(n: usize, k: usize, words: &[Word]) -> Self {
        CacheEntry {
            version: CACHE_VERSION,
            n,
            k,
            words: words.iter().map(|w| w.letters().collect()).collect(),
        }
    }

    pub fn to_words(&self) -> Vec<Word> {
        self.words.iter().map(|w| Word::from_letters(w)).collect()
    }
}

/// Where a basis came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheSource {
    Loaded,
    Generated,
}

pub fn entry_path(dir: &Path, n: usize, k: usize) -> PathBuf {
    dir.join(format!("lyndon-n{n}-k{k}.json"))
}

pub fn save(dir: &Path, n: usize, k: usize, words: &[Word]) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir).map_err(|source| CacheError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = entry_path(dir, n, k);
    let text = serde_json::to_string(&CacheEntry::new(n, k, words)).map_err(|source| CacheError::Json {
        path: path.clone(),
        source,
    })?;
    fs::write(&path, text).map_err(|source| CacheError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Reads a cached basis; `None` when absent, stale or for another `(n, k)`.
pub fn load(dir: &Path, n: usize, k: usize) -> Result<Option<Vec<Word>>, CacheError> {
    let path = entry_path(dir, n, k);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(CacheError::Io { path, source }),
    };
    let entry: CacheEntry = match serde_json::from_str(&text) {
        Ok(e) => e,
        Err(e) => {
            warn!("{}: unreadable cache entry ({e}), regenerating", path.display());
            return Ok(None);
        }
    };
    if entry.version != CACHE_VERSION || entry.n != n || entry.k != k {
        info!("{}: stale cache entry (version {}), regenerating", path.display(), entry.version);
        return Ok(None);
    }
    Ok(Some(entry.to_words()))
}

/// Installs the basis for `(n, k)` from `dir`, generating and storing it when
/// the file is missing, stale or fails validation.
pub fn warm(dir: &Path, n: usize, k: usize) -> Result<CacheSource, CacheError> {
    if let Some(words) = load(dir, n, k)? {
        match seed_lyndon_basis(n, k, words) {
            Ok(()) => {
                debug!("loaded Lyndon basis n={n} k={k} from cache");
                return Ok(CacheSource::Loaded);
            }
            Err(e) => warn!("{e}; regenerating"),
        }
    }
    let words = lyndon_basis(n, k);
    save(dir, n, k, &words)?;
    debug!("stored Lyndon basis n={n} k={k}");
    Ok(CacheSource::Generated)
}

/// Saves the basis for `(n, k)`, reads it back and compares.
pub fn roundtrip(dir: &Path, n: usize, k: usize) -> Result<(usize, bool), CacheError> {
    let words = lyndon_basis(n, k);
    save(dir, n, k, &words)?;
    let back = load(dir, n, k)?.unwrap_or_default();
    Ok((words.len(), back == *words))
}
