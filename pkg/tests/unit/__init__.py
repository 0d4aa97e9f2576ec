# Unit tests per module
