"""Tests for tph_invert"""
