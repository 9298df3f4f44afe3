"""Pydantic models for documents and reports."""
