# CLI Tests Package 
