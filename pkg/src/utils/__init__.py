# Corpus helpers
