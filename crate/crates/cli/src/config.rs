//! `key=value` configuration files. Keys mirror the global flags:
//! `d`, `l`, `m`, `format`, `sub`. Blank lines and `#` comments are ignored.

use crate::syntax::ParseError;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigValues {
    pub d: Option<i64>,
    pub l: Option<i64>,
    pub m: Option<i64>,
    pub format: Option<String>,
    pub sub: Option<String>,
}

pub fn parse_config(text: &str) -> Result<ConfigValues, ParseError> {
    let mut out = ConfigValues::default();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError::Config { line: n + 1, message };
        let (key, value) = line.split_once('=').ok_or_else(|| err("expected key=value".into()))?;
        let (key, value) = (key.trim(), value.trim());
        let int = || value.parse::<i64>().map_err(|_| err(format!("`{value}` is not an integer")));
        match key {
            "d" => out.d = Some(int()?),
            "l" => out.l = Some(int()?),
            "m" => out.m = Some(int()?),
            "format" => out.format = Some(value.to_string()),
            "sub" => out.sub = Some(value.to_string()),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = parse_config("# family\nd = 4\nl=4\nm=9 # nine\n\nsub=1,5,9\nformat=text\n").unwrap();
        assert_eq!(c.d, Some(4));
        assert_eq!(c.l, Some(4));
        assert_eq!(c.m, Some(9));
        assert_eq!(c.sub.as_deref(), Some("1,5,9"));
        assert_eq!(c.format.as_deref(), Some("text"));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_config("d"), Err(ParseError::Config { line: 1, .. })));
        assert!(matches!(parse_config("\nq=1"), Err(ParseError::Config { line: 2, .. })));
        assert!(parse_config("d=four").is_err());
    }
}
