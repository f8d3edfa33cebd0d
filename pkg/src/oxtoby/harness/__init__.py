"""Lemma campaigns, fault injection, file formats and the command line."""
