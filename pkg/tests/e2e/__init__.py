# End-to-End Tests Package 
