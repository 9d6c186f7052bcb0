use std::fs;

use klcellkit::cache::{cache_build, cache_load, cache_path, load_or_build, verify_sample, CACHE_VERSION, HEADER_LEN};
use klcellkit::{Error, KLTable};

#[test]
fn rank_6_round_trip_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let (header, built) = cache_build(6, dir.path()).unwrap();
    assert_eq!((header.version, header.rank, header.count), (CACHE_VERSION, 6, 720));
    let loaded = cache_load(6, dir.path()).unwrap();
    assert_eq!(loaded, built);
    assert_eq!(loaded, KLTable::new(6).unwrap());
    let report = verify_sample(&loaded, 0.01, 1);
    assert_eq!(report.sampled, 5184);
    assert!(report.mismatches.is_empty());
}

#[test]
fn rank_6_rebuild_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    cache_build(6, a.path()).unwrap();
    cache_build(6, b.path()).unwrap();
    let (fa, fb) = (
        fs::read(cache_path(a.path(), 6)).unwrap(),
        fs::read(cache_path(b.path(), 6)).unwrap(),
    );
    assert_eq!(fa, fb);
    cache_build(6, a.path()).unwrap();
    assert_eq!(fs::read(cache_path(a.path(), 6)).unwrap(), fb);
    let leftovers: Vec<_> = fs::read_dir(a.path()).unwrap().collect();
    assert_eq!(leftovers.len(), 1);
}

#[test]
fn corruption_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    cache_build(5, dir.path()).unwrap();
    let path = cache_path(dir.path(), 5);
    let bytes = fs::read(&path).unwrap();

    fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
    assert!(matches!(cache_load(5, dir.path()), Err(Error::CacheChecksum(_))));

    let mut flipped = bytes.clone();
    flipped[HEADER_LEN + 17] ^= 0x40;
    fs::write(&path, &flipped).unwrap();
    assert!(matches!(cache_load(5, dir.path()), Err(Error::CacheChecksum(_))));

    let mut versioned = bytes.clone();
    versioned[4..8].copy_from_slice(&(CACHE_VERSION + 1).to_le_bytes());
    fs::write(&path, &versioned).unwrap();
    assert!(matches!(cache_load(5, dir.path()), Err(Error::CacheVersion { .. })));

    assert!(matches!(load_or_build(5, dir.path()), Err(Error::CacheVersion { .. })));
    fs::remove_file(&path).unwrap();
    assert_eq!(*load_or_build(5, dir.path()).unwrap(), KLTable::new(5).unwrap());
    assert_eq!(fs::read(&path).unwrap(), bytes);
}
