//! Drive the command-line front end in-process: a moment run that fills an
//! on-disk cache, then a rerun that only reads it.

use hecke_moments::cache::LCache;
use hecke_moments::cli;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("hecke-moments-demo-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cache = dir.join("lvalues.tsv");
    let args = |tag: &str| {
        vec![
            "hecke-moments".to_string(),
            "moment".into(),
            "--family".into(),
            "cubic".into(),
            "--y".into(),
            "5000".into(),
            "--cache".into(),
            cache.display().to_string(),
            "--out".into(),
            dir.join(tag).with_extension("json").display().to_string(),
        ]
    };
    let mut stderr = std::io::stderr();
    for tag in ["cold", "warm"] {
        let code = cli::run(args(tag), &mut std::io::stdout(), &mut stderr);
        println!("{tag} run: exit {code}, cache holds {} values", LCache::load(&cache)?.len());
    }
    let strip = |p: &std::path::Path| -> Result<serde_json::Value, Box<dyn std::error::Error>> {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p)?)?;
        v["runtime_s"] = serde_json::Value::Null;
        Ok(v)
    };
    println!("reports identical apart from timing: {}", strip(&dir.join("cold.json"))? == strip(&dir.join("warm.json"))?);
    println!("contributions CSV: {}", dir.join("warm.csv").display());
    Ok(())
}
