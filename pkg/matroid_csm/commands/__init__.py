"""Command handlers behind the CLI subcommands."""
