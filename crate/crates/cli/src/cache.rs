//! On-disk cache for sweep results, keyed by command, cube-data hash and
//! parameters. A corrupt or mismatched entry is reported and recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use madness_core::Tableau;

#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct Key {
    command: String,
    cube_data_hash: String,
    params: String,
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    key: Key,
    value: T,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, command: &str, params: &str) -> PathBuf {
        let hash = Tableau::data_hash();
        let safe: String = params
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '-' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        let name = if safe.is_empty() {
            format!("{command}-{}.json", &hash[..12])
        } else {
            format!("{command}-{safe}-{}.json", &hash[..12])
        };
        self.dir.join(name)
    }

    fn load<T: DeserializeOwned>(&self, path: &Path, key: &Key) -> Option<T> {
        let text = fs::read_to_string(path).ok()?;
        match serde_json::from_str::<Entry<T>>(&text) {
            Ok(entry) if entry.key == *key => Some(entry.value),
            Ok(_) => {
                eprintln!(
                    "warning: cache entry {} has a different key; recomputing",
                    path.display()
                );
                None
            }
            Err(e) => {
                eprintln!(
                    "warning: cache entry {} is corrupt ({e}); recomputing",
                    path.display()
                );
                None
            }
        }
    }

    fn store<T: Serialize>(&self, path: &Path, key: Key, value: &T) {
        let write = || -> std::io::Result<()> {
            fs::create_dir_all(&self.dir)?;
            let text =
                serde_json::to_string(&Entry { key, value }).map_err(std::io::Error::other)?;
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, text)?;
            fs::rename(&tmp, path)
        };
        if let Err(e) = write() {
            eprintln!(
                "warning: could not write cache entry {}: {e}",
                path.display()
            );
        }
    }
}

/// Look `(command, params)` up in the cache, computing and storing on a miss.
/// Returns the value and whether it came from the cache.
pub fn cached<T, F>(
    cache: Option<&Cache>,
    command: &str,
    params: &str,
    compute: F,
) -> anyhow::Result<(T, bool)>
where
    T: Serialize + DeserializeOwned,
    F: FnOnce() -> anyhow::Result<T>,
{
    let Some(cache) = cache else {
        return Ok((compute()?, false));
    };
    let key = Key {
        command: command.to_string(),
        cube_data_hash: Tableau::data_hash(),
        params: params.to_string(),
    };
    let path = cache.path(command, params);
    if let Some(v) = cache.load(&path, &key) {
        return Ok((v, true));
    }
    let value = compute()?;
    cache.store(&path, key, &value);
    Ok((value, false))
}
