"""Exact symbolic engine for the quantum extended Galilei pair F_q / U_q."""
