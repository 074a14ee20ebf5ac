use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// A thread-safe memo table. Values are computed outside the lock, so a
/// recursive computation may consult the same table; a racing duplicate
/// computation is harmless because every entry is a pure function of its key.
pub(crate) struct Memo<K, V> {
    map: Mutex<Option<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { map: Mutex::new(None) }
    }

    pub(crate) fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.lock().as_ref().and_then(|m| m.get(key)) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut guard = self.lock();
        let map = guard.get_or_insert_with(HashMap::new);
        Arc::clone(map.entry(key.clone()).or_insert(value))
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Option<HashMap<K, Arc<V>>>> {
        // a panic while holding the lock cannot leave a half-written entry
        self.map.lock().unwrap_or_else(|e| e.into_inner())
    }
}
