//! `--config FILE`: a JSON object whose keys mirror long flags. Flags given on
//! the command line win; config entries are appended only for absent flags.
use crate::CliError;
use serde_json::Value;
use std::path::Path;

/// Removes `--config FILE` from `args` and appends the file's settings.
pub fn merge(mut args: Vec<String>) -> Result<Vec<String>, CliError> {
    let Some(path) = take_config(&mut args)? else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
    let Value::Object(map) = value else {
        return Err(CliError::Usage(format!(
            "config {} must hold a JSON object",
            path.display()
        )));
    };
    let mut extra = Vec::new();
    for (key, value) in map {
        let flag = format!("--{}", key.replace('_', "-"));
        let present = args.iter().any(|a| a == &flag || a.starts_with(&format!("{flag}=")));
        if present {
            continue;
        }
        match value {
            Value::Bool(true) => extra.push(flag),
            Value::Bool(false) | Value::Null => {}
            Value::Number(n) => extra.extend([flag, n.to_string()]),
            Value::String(s) => extra.extend([flag, s]),
            Value::Array(items) => {
                let parts: Result<Vec<String>, CliError> = items
                    .into_iter()
                    .map(|v| match v {
                        Value::Number(n) => Ok(n.to_string()),
                        Value::String(s) => Ok(s),
                        other => Err(CliError::Usage(format!("config key `{key}`: unsupported item {other}"))),
                    })
                    .collect();
                extra.extend([flag, parts?.join(",")]);
            }
            Value::Object(_) => {
                return Err(CliError::Usage(format!("config key `{key}` must not be an object")));
            }
        }
    }
    args.extend(extra);
    Ok(args)
}

fn take_config(args: &mut Vec<String>) -> Result<Option<std::path::PathBuf>, CliError> {
    let Some(pos) = args.iter().position(|a| a == "--config" || a.starts_with("--config=")) else {
        return Ok(None);
    };
    let arg = args.remove(pos);
    let path = match arg.strip_prefix("--config=") {
        Some(p) => p.to_string(),
        None => {
            if pos >= args.len() {
                return Err(CliError::Usage("--config requires a file path".into()));
            }
            args.remove(pos)
        }
    };
    Ok(Some(Path::new(&path).to_path_buf()))
}
