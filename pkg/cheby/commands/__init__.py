# Commands package

# Process exit statuses
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID_CONFIG = 2
EXIT_NUMERICAL_FAILURE = 3
