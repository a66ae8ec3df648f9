use crate::error::PipelineError;
use crate::resources::StopwordSet;

/// Lowercase alphabetic tokens; anything else separates words.
pub fn tokenize(description: &str) -> Result<Vec<String>, PipelineError> {
    let tokens: Vec<String> = description
        .split(|c: char| !c.is_alphabetic())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect();
    if tokens.is_empty() {
        return Err(PipelineError::EmptyDescription);
    }
    Ok(tokens)
}

/// Drops stopwords, keeping order and repeats.
pub fn extract_roots(tokens: &[String], stopwords: &StopwordSet) -> Result<Vec<String>, PipelineError> {
    let roots: Vec<String> = tokens.iter().filter(|t| !stopwords.contains(t)).cloned().collect();
    if roots.is_empty() {
        return Err(PipelineError::NoRoots);
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn splits_description_into_words() {
        assert_eq!(
            tokenize("Creating an application to split expense wisely").unwrap(),
            strs(&["creating", "an", "application", "to", "split", "expense", "wisely"])
        );
        assert_eq!(tokenize("A-B c").unwrap(), strs(&["a", "b", "c"]));
    }

    #[test]
    fn no_letters_is_empty() {
        assert_eq!(tokenize("123 !!"), Err(PipelineError::EmptyDescription));
        assert_eq!(tokenize(""), Err(PipelineError::EmptyDescription));
        assert_eq!(tokenize("   "), Err(PipelineError::EmptyDescription));
    }

    #[test]
    fn roots_skip_stopwords() {
        let stop = StopwordSet::parse("t", "an\nto\n").unwrap();
        let tokens = tokenize("Creating an application to split expense wisely").unwrap();
        assert_eq!(
            extract_roots(&tokens, &stop).unwrap(),
            strs(&["creating", "application", "split", "expense", "wisely"])
        );
        assert_eq!(extract_roots(&strs(&["an", "to"]), &stop), Err(PipelineError::NoRoots));
        assert_eq!(
            extract_roots(&strs(&["split", "split"]), &stop).unwrap(),
            strs(&["split", "split"])
        );
    }
}
